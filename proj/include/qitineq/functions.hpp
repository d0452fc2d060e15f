#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qitineq/errors.hpp"

namespace qitineq {

// Scalar functions evaluated on operator spectra. The variant set matches the
// CLI mini-language: "pow:0.5", "id", "const:2", "exp", "log", "poly:1,0,3",
// "affine:a,b".
struct ScalarFunction {
    struct Power { double exponent; };      // x^p, domain x >= 0 (0^0 := 1)
    struct Constant { double value; };
    struct Identity {};
    struct Exp {};
    struct Log {};                          // domain x > 0
    struct Polynomial { std::vector<double> coeffs; };  // c0 + c1 x + ...
    struct Affine { double a; double b; };  // a x + b

    using Spec = std::variant<Power, Constant, Identity, Exp, Log, Polynomial, Affine>;
    Spec spec;

    static ScalarFunction power(double p) { return {Power{p}}; }
    static ScalarFunction constant(double c) { return {Constant{c}}; }
    static ScalarFunction identity() { return {Identity{}}; }
    static ScalarFunction exponential() { return {Exp{}}; }
    static ScalarFunction logarithm() { return {Log{}}; }
    static ScalarFunction polynomial(std::vector<double> coeffs) {
        return {Polynomial{std::move(coeffs)}};
    }
    static ScalarFunction affine(double a, double b) { return {Affine{a, b}}; }

    double eval(double x) const;         // throws DomainViolation outside the domain
    bool in_domain(double x) const;

    enum class Monotonicity { increasing, decreasing, constant, unknown };
    // Symbolic classification, valid on x >= 0 (the spectra this library sees).
    Monotonicity monotonicity() const;

    std::string to_string() const;
    static ScalarFunction parse(const std::string& text);
};

struct FunctionPair {
    ScalarFunction f;
    ScalarFunction g;

    // (f(x)-f(y))(g(x)-g(y)) >= -1e-12 over all pairs of sample points.
    bool same_monotone_on(const std::vector<double>& points) const;

    // Symbolic fast path when both monotonicities are known, otherwise the
    // numeric certificate on the spectrum plus 64 grid points of its
    // enclosing interval.
    bool certify_same_monotone(const std::vector<double>& spectrum) const;
};

// spectrum points plus a 64-point grid over [min, max]
std::vector<double> certification_points(const std::vector<double>& spectrum);

}  // namespace qitineq
