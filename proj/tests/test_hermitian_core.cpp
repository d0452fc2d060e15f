#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qitineq/eig.hpp"
#include "qitineq/instances.hpp"

using namespace qitineq;

namespace {

ComplexMatrix diag2(double a, double b) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() { return diag2(1.0, -1.0); }

ComplexMatrix random_psd(std::uint64_t seed, std::size_t dim, double shift = 0.1) {
    ComplexMatrix g = gen_matrix(seed, dim);
    return g.adjoint() * g + ComplexMatrix::identity(dim) * cplx(shift);
}

}  // namespace

TEST_CASE("eig_hermitian on diagonal and Pauli inputs") {
    HermitianSpectrum s = eig_hermitian(diag2(3.0, 1.0));
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
    // eigenvectors permute the identity
    for (std::size_t j = 0; j < 2; ++j) {
        double c0 = std::abs(s.eigenvectors(0, j));
        double c1 = std::abs(s.eigenvectors(1, j));
        CHECK(std::abs(std::max(c0, c1) - 1.0) < 1e-12);
        CHECK(std::min(c0, c1) < 1e-12);
    }

    HermitianSpectrum sx = eig_hermitian(pauli_x());
    CHECK(sx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian reconstruction on random Hermitian matrices") {
    ComplexMatrix h = gen_hermitian(101, 5);
    HermitianSpectrum s = eig_hermitian(h);
    CHECK((s.reconstruct() - h).frobenius_norm() <= 1e-9 * std::max(1.0, h.frobenius_norm()));

    // round-trip across dims 2..8
    for (std::size_t dim = 2; dim <= 8; ++dim) {
        for (std::uint64_t k = 0; k < 25; ++k) {
            ComplexMatrix m = gen_hermitian(derive_seed(7, "rt", dim * 100 + k), dim);
            HermitianSpectrum sp = eig_hermitian(m);
            CHECK((sp.reconstruct() - m).frobenius_norm() <=
                  1e-9 * std::max(1.0, m.frobenius_norm()));
            // unitarity
            ComplexMatrix utu = sp.eigenvectors.adjoint() * sp.eigenvectors;
            CHECK((utu - ComplexMatrix::identity(dim)).frobenius_norm() <= 1e-10 * dim);
            // ascending order
            for (std::size_t i = 1; i < dim; ++i)
                CHECK(sp.eigenvalues[i - 1] <= sp.eigenvalues[i] + 1e-14);
        }
    }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;  // nilpotent, far from Hermitian
    CHECK_THROWS_AS(eig_hermitian(m), NotHermitian);
}

TEST_CASE("apply_function spectral calculus") {
    ComplexMatrix sq = apply_function(diag2(2.0, 3.0), ScalarFunction::polynomial({0, 0, 1}));
    CHECK(sq(0, 0).real() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sq(1, 1).real() == doctest::Approx(9.0).epsilon(1e-12));

    ComplexMatrix rt = apply_function(diag2(0.75, 0.25), ScalarFunction::power(0.5));
    CHECK(rt(0, 0).real() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(rt(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));

    // f(x) = x^0.3 on a random PSD matrix vs elementwise eigenbasis evaluation
    ComplexMatrix p = random_psd(11, 4);
    ComplexMatrix got = apply_function(p, ScalarFunction::power(0.3));
    HermitianSpectrum sp = eig_hermitian(p);
    ComplexMatrix d(4, 4);
    for (std::size_t i = 0; i < 4; ++i) d(i, i) = std::pow(sp.eigenvalues[i], 0.3);
    ComplexMatrix want = sp.eigenvectors * d * sp.eigenvectors.adjoint();
    CHECK((got - want).frobenius_norm() <= 1e-10);

    // result commutes with the input
    CHECK(commutator(got, p).frobenius_norm() <= 1e-9 * std::max(1.0, p.frobenius_norm()));

    CHECK_THROWS_AS(apply_function(diag2(1.0, -1.0), ScalarFunction::logarithm()),
                    DomainViolation);
}

TEST_CASE("spectral calculus is multiplicative on function products") {
    for (std::uint64_t k = 0; k < 20; ++k) {
        ComplexMatrix p = random_psd(derive_seed(3, "hom", k), 4);
        ComplexMatrix a = apply_function(p, ScalarFunction::power(0.3));
        ComplexMatrix b = apply_function(p, ScalarFunction::power(0.7));
        ComplexMatrix prod = apply_function(p, ScalarFunction::power(1.0));
        CHECK((a * b - prod).frobenius_norm() <= 1e-9 * std::max(1.0, prod.frobenius_norm()));
    }
}

TEST_CASE("min_eigenvalue closed forms and shift covariance") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 0.5;
    m(1, 0) = 0.5;
    m(1, 1) = 1.0;
    CHECK(min_eigenvalue(m) == doctest::Approx(0.5).epsilon(1e-12));

    m(0, 1) = 2.0;
    m(1, 0) = 2.0;
    CHECK(min_eigenvalue(m) == doctest::Approx(-1.0).epsilon(1e-12));

    CHECK(min_eigenvalue(ComplexMatrix::identity(5)) == doctest::Approx(1.0).epsilon(1e-12));

    for (std::uint64_t k = 0; k < 30; ++k) {
        ComplexMatrix h = gen_hermitian(derive_seed(5, "shift", k), 4);
        double c = Rng(derive_seed(5, "shiftc", k)).uniform(-3.0, 3.0);
        double shifted = min_eigenvalue(h + ComplexMatrix::identity(4) * cplx(c));
        double scale = std::max(1.0, h.frobenius_norm());
        CHECK(std::abs(shifted - (min_eigenvalue(h) + c)) <= 1e-9 * scale);
    }
}

TEST_CASE("is_psd uses the relative tolerance") {
    CHECK(is_psd(ComplexMatrix::identity(3)));
    CHECK(is_psd(ComplexMatrix::zero(2, 2)));
    CHECK_FALSE(is_psd(diag2(1.0, -0.5)));
}

TEST_CASE("schur_psd_check equality and strict cases") {
    ComplexMatrix i1 = ComplexMatrix::identity(1);
    auto [ok_eq, m_eq] = schur_psd_check(i1, i1, i1);
    CHECK(ok_eq);
    CHECK(std::abs(m_eq) <= 1e-12);

    auto [ok2, m2] = schur_psd_check(i1 * cplx(2.0), i1, i1);
    CHECK(ok2);
    CHECK(m2 == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(schur_psd_check(i1, i1, ComplexMatrix::zero(1, 1)), SingularB);
}

TEST_CASE("schur_psd_check agrees with direct block assembly in sign") {
    std::size_t tested = 0;
    for (std::uint64_t k = 0; k < 400; ++k) {
        std::size_t dim = 2 + k % 3;
        ComplexMatrix a = gen_hermitian(derive_seed(9, "sa", k), dim);
        ComplexMatrix x = gen_matrix(derive_seed(9, "sx", k), dim);
        ComplexMatrix b = random_psd(derive_seed(9, "sb", k), dim, 0.3);
        auto [ok, margin] = schur_psd_check(a, x, b);
        ComplexMatrix assembled = assemble_block_2x2(a, x, x.adjoint(), b);
        double direct = normalized_min_eigenvalue(assembled);
        // skip the numerical boundary band
        if (std::abs(margin) <= 1e-7 || std::abs(direct) <= 1e-7) continue;
        CHECK((margin > 0) == (direct > 0));
        CHECK(ok == (margin >= -1e-9));
        ++tested;
    }
    CHECK(tested > 100);
}

TEST_CASE("commutator identities") {
    ComplexMatrix c = commutator(pauli_x(), pauli_y());
    CHECK((c - pauli_z() * cplx(0.0, 2.0)).frobenius_norm() <= 1e-14);

    ComplexMatrix a = gen_hermitian(13, 3);
    CHECK(commutator(a, a).frobenius_norm() <= 1e-14);
    CHECK(commutator(diag2(1.0, 2.0), diag2(3.0, 4.0)).frobenius_norm() <= 1e-14);

    // Hermitian inputs give a skew-Hermitian commutator
    ComplexMatrix b = gen_hermitian(14, 3);
    ComplexMatrix ab = commutator(a, b);
    CHECK((ab + ab.adjoint()).frobenius_norm() <= 1e-12);

    CHECK_THROWS_AS(commutator(a, ComplexMatrix::identity(2)), DimensionMismatch);
}

TEST_CASE("real and imaginary parts") {
    ComplexMatrix i_times_id = ComplexMatrix::identity(2) * cplx(0.0, 1.0);
    CHECK(real_part(i_times_id).frobenius_norm() <= 1e-14);
    CHECK(imag_part(pauli_x()).frobenius_norm() <= 1e-14);

    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0;
    CHECK((real_part(a) - pauli_x() * cplx(0.5)).frobenius_norm() <= 1e-14);
    CHECK((imag_part(a) - pauli_y() * cplx(0.5)).frobenius_norm() <= 1e-14);

    // decomposition identity A = Re(A) + i Im(A)
    ComplexMatrix g = gen_matrix(15, 3);
    ComplexMatrix rebuilt = real_part(g) + imag_part(g) * cplx(0.0, 1.0);
    CHECK((rebuilt - g).frobenius_norm() <= 1e-12);
}

TEST_CASE("inverse_strictly_positive") {
    ComplexMatrix inv = inverse_strictly_positive(diag2(2.0, 4.0));
    CHECK(inv(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(inv(1, 1).real() == doctest::Approx(0.25).epsilon(1e-12));

    ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK((inverse_strictly_positive(id) - id).frobenius_norm() <= 1e-12);

    for (std::uint64_t k = 0; k < 20; ++k) {
        ComplexMatrix p = random_psd(derive_seed(17, "inv", k), 4, 0.05);
        ComplexMatrix r = inverse_strictly_positive(p);
        CHECK((p * r - ComplexMatrix::identity(4)).frobenius_norm() <= 1e-8);
        CHECK(r.hermiticity_defect() <= 1e-10 * std::max(1.0, r.frobenius_norm()));
    }

    CHECK_THROWS_AS(inverse_strictly_positive(diag2(1.0, 0.0)), SingularB);
}
