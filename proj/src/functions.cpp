#include "qitineq/functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qitineq {

namespace {

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            double v = std::stod(item, &pos);
            if (pos != item.size()) throw ParseError("trailing characters in number: " + item);
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("not a number: " + item);
        }
    }
    if (out.empty()) throw ParseError("expected at least one number");
    return out;
}

}  // namespace

double ScalarFunction::eval(double x) const {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Power>) {
                if (x < 0.0 && s.exponent != std::floor(s.exponent))
                    throw DomainViolation("pow: negative argument with non-integer exponent");
                if (x == 0.0 && s.exponent == 0.0) return 1.0;  // 0^0 := 1
                return std::pow(x, s.exponent);
            } else if constexpr (std::is_same_v<T, Constant>) {
                return s.value;
            } else if constexpr (std::is_same_v<T, Identity>) {
                return x;
            } else if constexpr (std::is_same_v<T, Exp>) {
                return std::exp(x);
            } else if constexpr (std::is_same_v<T, Log>) {
                if (x <= 0.0) throw DomainViolation("log: nonpositive argument");
                return std::log(x);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                double acc = 0.0;
                for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it)
                    acc = acc * x + *it;
                return acc;
            } else {
                return s.a * x + s.b;
            }
        },
        spec);
}

bool ScalarFunction::in_domain(double x) const {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Power>)
                return x >= 0.0 || s.exponent == std::floor(s.exponent);
            else if constexpr (std::is_same_v<T, Log>)
                return x > 0.0;
            else
                return true;
        },
        spec);
}

ScalarFunction::Monotonicity ScalarFunction::monotonicity() const {
    using M = Monotonicity;
    return std::visit(
        [](const auto& s) -> M {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Power>) {
                if (s.exponent == 0.0) return M::constant;
                return s.exponent > 0.0 ? M::increasing : M::decreasing;
            } else if constexpr (std::is_same_v<T, Constant>) {
                return M::constant;
            } else if constexpr (std::is_same_v<T, Identity>) {
                return M::increasing;
            } else if constexpr (std::is_same_v<T, Exp>) {
                return M::increasing;
            } else if constexpr (std::is_same_v<T, Log>) {
                return M::increasing;
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                bool all_nonneg = true, all_zero_past_const = true;
                for (std::size_t i = 1; i < s.coeffs.size(); ++i) {
                    if (s.coeffs[i] < 0.0) all_nonneg = false;
                    if (s.coeffs[i] != 0.0) all_zero_past_const = false;
                }
                if (all_zero_past_const) return M::constant;
                return all_nonneg ? M::increasing : M::unknown;
            } else {
                if (s.a == 0.0) return M::constant;
                return s.a > 0.0 ? M::increasing : M::decreasing;
            }
        },
        spec);
}

std::string ScalarFunction::to_string() const {
    std::ostringstream os;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Power>)
                os << "pow:" << s.exponent;
            else if constexpr (std::is_same_v<T, Constant>)
                os << "const:" << s.value;
            else if constexpr (std::is_same_v<T, Identity>)
                os << "id";
            else if constexpr (std::is_same_v<T, Exp>)
                os << "exp";
            else if constexpr (std::is_same_v<T, Log>)
                os << "log";
            else if constexpr (std::is_same_v<T, Polynomial>) {
                os << "poly:";
                for (std::size_t i = 0; i < s.coeffs.size(); ++i)
                    os << (i ? "," : "") << s.coeffs[i];
            } else {
                os << "affine:" << s.a << "," << s.b;
            }
        },
        spec);
    return os.str();
}

ScalarFunction ScalarFunction::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "id") return identity();
    if (head == "exp") return exponential();
    if (head == "log") return logarithm();
    if (head == "pow") {
        auto v = parse_csv_doubles(args);
        if (v.size() != 1) throw ParseError("pow expects one argument");
        return power(v[0]);
    }
    if (head == "const") {
        auto v = parse_csv_doubles(args);
        if (v.size() != 1) throw ParseError("const expects one argument");
        return constant(v[0]);
    }
    if (head == "poly") return polynomial(parse_csv_doubles(args));
    if (head == "affine") {
        auto v = parse_csv_doubles(args);
        if (v.size() != 2) throw ParseError("affine expects two arguments");
        return affine(v[0], v[1]);
    }
    throw ParseError("unknown function spec: " + text);
}

bool FunctionPair::same_monotone_on(const std::vector<double>& points) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double df = f.eval(points[i]) - f.eval(points[j]);
            double dg = g.eval(points[i]) - g.eval(points[j]);
            if (df * dg < -1e-12) return false;
        }
    return true;
}

bool FunctionPair::certify_same_monotone(const std::vector<double>& spectrum) const {
    using M = ScalarFunction::Monotonicity;
    M mf = f.monotonicity(), mg = g.monotonicity();
    if (mf == M::constant || mg == M::constant) return true;
    if (mf != M::unknown && mg != M::unknown) return mf == mg;
    return same_monotone_on(certification_points(spectrum));
}

std::vector<double> certification_points(const std::vector<double>& spectrum) {
    std::vector<double> pts = spectrum;
    if (spectrum.empty()) return pts;
    auto [lo_it, hi_it] = std::minmax_element(spectrum.begin(), spectrum.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi > lo) {
        for (int k = 0; k < 64; ++k)
            pts.push_back(lo + (hi - lo) * static_cast<double>(k) / 63.0);
    }
    return pts;
}

}  // namespace qitineq
