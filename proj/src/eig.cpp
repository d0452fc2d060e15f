#include "qitineq/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qitineq {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-12;
constexpr double kHermiticityTol = 1e-10;
constexpr double kStrictPositivityTol = 1e-10;

double offdiagonal_mass(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t p = 0; p < m.rows(); ++p)
        for (std::size_t q = 0; q < m.cols(); ++q)
            if (p != q) s += std::norm(m(p, q));
    return std::sqrt(s);
}

}  // namespace

ComplexMatrix HermitianSpectrum::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
            r(i, j) = s;
        }
    return r;
}

HermitianSpectrum eig_hermitian(const ComplexMatrix& m) {
    if (!m.is_square()) throw NotHermitian("eig_hermitian: matrix not square");
    const double scale = std::max(1.0, m.frobenius_norm());
    if (m.hermiticity_defect() > kHermiticityTol * scale)
        throw NotHermitian("eig_hermitian: asymmetry above tolerance");

    ComplexMatrix a = m.hermitized();
    const std::size_t n = a.rows();
    ComplexMatrix u = ComplexMatrix::identity(n);
    const double norm = a.frobenius_norm();
    const double target = kOffDiagonalTol * std::max(norm, 1e-300);

    int sweep = 0;
    while (offdiagonal_mass(a) > target) {
        if (++sweep > kMaxSweeps)
            throw NoConvergence("eig_hermitian: sweep cap reached");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= target / (n * n)) continue;
                const cplx phase = a(p, q) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = tau >= 0.0
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx pc = std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {  // A <- A V
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * pc * akq;
                    a(k, q) = s * akp + c * pc * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- V* A
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {  // U <- U V
                    const cplx ukp = u(k, p), ukq = u(k, q);
                    u(k, p) = c * ukp - s * pc * ukq;
                    u(k, q) = s * ukp + c * pc * ukq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = u(i, order[k]);
    }
    return out;
}

double min_eigenvalue(const ComplexMatrix& m) {
    auto spec = eig_hermitian(m);
    return spec.eigenvalues.front();
}

double max_eigenvalue(const ComplexMatrix& m) {
    auto spec = eig_hermitian(m);
    return spec.eigenvalues.back();
}

bool is_psd(const ComplexMatrix& m, double tol) {
    return min_eigenvalue(m) >= -tol * std::max(1.0, m.frobenius_norm());
}

ComplexMatrix apply_pointwise(const ComplexMatrix& m,
                              const std::function<double(double)>& fn) {
    auto spec = eig_hermitian(m);
    const std::size_t n = spec.eigenvalues.size();
    std::vector<double> vals(n);
    for (std::size_t k = 0; k < n; ++k) vals[k] = fn(spec.eigenvalues[k]);
    ComplexMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += spec.eigenvectors(i, k) * vals[k] * std::conj(spec.eigenvectors(j, k));
            r(i, j) = s;
        }
    return r;
}

ComplexMatrix apply_function(const ComplexMatrix& m, const ScalarFunction& f) {
    auto spec = eig_hermitian(m);
    for (double lambda : spec.eigenvalues)
        if (!f.in_domain(lambda))
            throw DomainViolation("apply_function: eigenvalue outside the function domain");
    return apply_pointwise(m, [&](double x) { return f.eval(x); });
}

ComplexMatrix inverse_strictly_positive(const ComplexMatrix& m) {
    auto spec = eig_hermitian(m);
    const double scale = std::max(1.0, m.frobenius_norm());
    if (spec.eigenvalues.front() <= kStrictPositivityTol * scale)
        throw SingularB("inverse_strictly_positive: operator not strictly positive");
    const std::size_t n = spec.eigenvalues.size();
    ComplexMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += spec.eigenvectors(i, k) * (1.0 / spec.eigenvalues[k]) *
                     std::conj(spec.eigenvectors(j, k));
            r(i, j) = s;
        }
    return r;
}

ComplexMatrix assemble_block_2x2(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const ComplexMatrix& xadj, const ComplexMatrix& b) {
    const std::size_t n = a.rows(), m = b.rows();
    if (!a.is_square() || !b.is_square() || x.rows() != n || x.cols() != m ||
        xadj.rows() != m || xadj.cols() != n)
        throw DimensionMismatch("assemble_block_2x2: nonconformal blocks");
    ComplexMatrix out(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, n + j) = x(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out(n + i, j) = xadj(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
    return out;
}

std::pair<bool, double> schur_psd_check(const ComplexMatrix& a, const ComplexMatrix& x,
                                        const ComplexMatrix& b) {
    if (min_eigenvalue(b) <= kStrictPositivityTol * b.frobenius_norm())
        throw SingularB("schur_psd_check: B not strictly positive");
    ComplexMatrix binv = inverse_strictly_positive(b);
    ComplexMatrix diff = a - x * binv * x.adjoint();
    double margin = normalized_min_eigenvalue(diff.hermitized());
    return {margin >= -1e-9, margin};
}

double normalized_min_eigenvalue(const ComplexMatrix& m) {
    return min_eigenvalue(m) / std::max(1.0, m.frobenius_norm());
}

}  // namespace qitineq
