#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qitineq/instances.hpp"
#include "qitineq/measures.hpp"

using namespace qitineq;

namespace {

const AlgebraShape kQubit{{2}};

BlockDiagonalElement qubit(const ComplexMatrix& m) { return {kQubit, {m}}; }

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

ComplexMatrix pauli_z() { return diag2(1.0, -1.0); }

MeasureContext classical_qubit(double p) {
    return {TracialMap::scalar_trace(kQubit), qubit(diag2(p, 1.0 - p)),
            {ScalarFunction::identity(), ScalarFunction::constant(1.0)}};
}

cplx scalar(const BlockDiagonalElement& x) { return x.block(0)(0, 0); }

}  // namespace

TEST_CASE("function mini-language parses and round-trips") {
    for (const char* text : {"pow:0.5", "id", "const:2", "exp", "log", "poly:1,0,3",
                             "affine:-1,1"}) {
        ScalarFunction f = ScalarFunction::parse(text);
        CHECK(ScalarFunction::parse(f.to_string()).to_string() == f.to_string());
    }
    CHECK(ScalarFunction::parse("poly:1,0,3").eval(2.0) == doctest::Approx(13.0));
    CHECK(ScalarFunction::parse("affine:-1,1").eval(0.25) == doctest::Approx(0.75));
    CHECK_THROWS_AS(ScalarFunction::parse("nope"), ParseError);
}

TEST_CASE("scalar function evaluation and domains") {
    CHECK(ScalarFunction::power(0.0).eval(0.0) == doctest::Approx(1.0));  // 0^0 := 1
    CHECK(ScalarFunction::power(0.5).eval(0.25) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ScalarFunction::power(0.5).eval(-1.0), DomainViolation);
    CHECK_THROWS_AS(ScalarFunction::logarithm().eval(0.0), DomainViolation);
    CHECK(ScalarFunction::polynomial({1, 0, 3}).eval(-2.0) == doctest::Approx(13.0));

    using M = ScalarFunction::Monotonicity;
    CHECK(ScalarFunction::power(2.0).monotonicity() == M::increasing);
    CHECK(ScalarFunction::constant(3.0).monotonicity() == M::constant);
    CHECK(ScalarFunction::affine(-1.0, 1.0).monotonicity() == M::decreasing);
}

TEST_CASE("same-monotone certificates") {
    std::vector<double> spectrum{0.25, 0.75};
    FunctionPair wy{ScalarFunction::power(0.5), ScalarFunction::power(0.5)};
    CHECK(wy.certify_same_monotone(spectrum));

    FunctionPair powers{ScalarFunction::power(1.3), ScalarFunction::power(0.2)};
    CHECK(powers.certify_same_monotone(spectrum));

    FunctionPair adversarial{ScalarFunction::power(1.0), ScalarFunction::affine(-1.0, 1.0)};
    CHECK_FALSE(adversarial.certify_same_monotone(spectrum));
    CHECK_FALSE(adversarial.same_monotone_on(certification_points(spectrum)));
}

TEST_CASE("classical covariance fixtures") {
    // rho = I/2, A = B = sigma_z: Tr(rho sz^2) - Tr(rho sz)^2 = 1
    MeasureContext ctx = classical_qubit(0.5);
    BlockDiagonalElement sz = qubit(pauli_z());
    CHECK(scalar(gen_variance(ctx, sz)).real() == doctest::Approx(1.0).epsilon(1e-12));

    // Cov(I, B) = 0 for g = 1
    BlockDiagonalElement id = BlockDiagonalElement::identity(kQubit);
    BlockDiagonalElement b = gen_hermitian_element(3, kQubit);
    CHECK(std::abs(scalar(gen_covariance(ctx, id, b))) <= 1e-12);

    // rho = diag(p, 1-p), A = sigma_x: variance 1 for every p
    for (double p : {0.1, 0.3, 0.75}) {
        MeasureContext c = classical_qubit(p);
        CHECK(scalar(gen_variance(c, qubit(pauli_x()))).real() ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("covariance requires a strictly positive normalizer") {
    // g = 0 makes Phi(f g^2) = 0
    MeasureContext ctx(TracialMap::scalar_trace(kQubit), qubit(diag2(0.5, 0.5)),
                       {ScalarFunction::identity(), ScalarFunction::constant(0.0)});
    BlockDiagonalElement a = qubit(pauli_x());
    CHECK_THROWS_AS(gen_covariance(ctx, a, a), SingularNormalizer);
    CHECK_NOTHROW(gen_correlation(ctx, a, a));  // Corr has no such precondition
}

TEST_CASE("skew information closed forms") {
    BlockDiagonalElement sx = qubit(pauli_x());
    for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        MeasureContext ctx(TracialMap::scalar_trace(kQubit), qubit(diag2(p, 1.0 - p)),
                           {ScalarFunction::power(0.5), ScalarFunction::power(0.5)});
        double want = 1.0 - 2.0 * std::sqrt(p * (1.0 - p));
        CHECK(scalar(skew_information(ctx, sx)).real() ==
              doctest::Approx(want).epsilon(1e-12));
    }

    // commuting rho, A
    MeasureContext half(TracialMap::scalar_trace(kQubit), qubit(diag2(0.75, 0.25)),
                        {ScalarFunction::power(0.5), ScalarFunction::power(0.5)});
    CHECK(std::abs(scalar(skew_information(half, qubit(pauli_z())))) <= 1e-12);

    // alpha = 1/4 spectral closed form
    double a = 0.25, l1 = 0.75, l2 = 0.25;
    MeasureContext quarter = alpha_context(TracialMap::scalar_trace(kQubit),
                                           qubit(diag2(l1, l2)), a);
    double want = 1.0 - (std::pow(l1, 1 - a) * std::pow(l2, a) +
                         std::pow(l1, a) * std::pow(l2, 1 - a));
    CHECK(scalar(skew_information(quarter, sx)).real() ==
          doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("symmetric correlation properties") {
    MeasureContext ctx = alpha_context(TracialMap::scalar_trace(kQubit),
                                       qubit(diag2(0.7, 0.3)), 0.3);
    BlockDiagonalElement a = gen_hermitian_element(5, kQubit);
    BlockDiagonalElement b = gen_hermitian_element(6, kQubit);

    // Hermitian A, B: Corr' = Re(Corr)
    BlockDiagonalElement re = element_real_part(gen_correlation(ctx, a, b));
    CHECK((sym_correlation(ctx, a, b) - re).frobenius_norm() <=
          1e-10 * std::max(1.0, re.frobenius_norm()));

    // sym_skew PSD for non-normal A under a same-monotone pair
    for (std::uint64_t k = 0; k < 100; ++k) {
        BlockDiagonalElement x = gen_element(derive_seed(43, "nn", k), kQubit);
        BlockDiagonalElement s = sym_skew_information(ctx, x).hermitized();
        CHECK(element_min_eigenvalue(s) >= -1e-9 * std::max(1.0, s.frobenius_norm()));
    }

    // conjugate symmetry on arbitrary elements
    BlockDiagonalElement x = gen_element(7, kQubit);
    BlockDiagonalElement y = gen_element(8, kQubit);
    CHECK((sym_correlation(ctx, x, y).adjoint() - sym_correlation(ctx, y, x))
              .frobenius_norm() <= 1e-12);
}

TEST_CASE("sym_correlation is linear in the second slot") {
    MeasureContext ctx = alpha_context(TracialMap::block_trace(AlgebraShape{{2, 2}}),
                                       gen_density(51, TracialMap::block_trace(AlgebraShape{{2, 2}})).rho,
                                       0.4);
    for (std::uint64_t k = 0; k < 50; ++k) {
        AlgebraShape shape{{2, 2}};
        BlockDiagonalElement a = gen_element(derive_seed(53, "a", k), shape);
        BlockDiagonalElement b = gen_element(derive_seed(53, "b", k), shape);
        BlockDiagonalElement c = gen_element(derive_seed(53, "c", k), shape);
        Rng rng(derive_seed(53, "lam", k));
        cplx lam(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        BlockDiagonalElement lhs = sym_correlation(ctx, a, b + c * lam);
        BlockDiagonalElement rhs =
            sym_correlation(ctx, a, b) + sym_correlation(ctx, a, c) * lam;
        CHECK((lhs - rhs).frobenius_norm() <= 1e-9 * std::max(1.0, rhs.frobenius_norm()));
    }
}

TEST_CASE("spectral-sum oracle equals the product formula") {
    const std::vector<PairFamily> families{PairFamily::alpha_powers,
                                           PairFamily::random_powers,
                                           PairFamily::poly_exp_mix};
    for (std::uint64_t k = 0; k < 500; ++k) {
        std::size_t dim = 2 + k % 4;  // dims 2..5
        AlgebraShape shape{{dim}};
        TracialMap phi = (k % 2 == 0) ? TracialMap::scalar_trace(shape)
                                      : TracialMap::center_expectation(shape);
        DensityElement rho = gen_density(derive_seed(61, "rho", k), phi);
        FunctionPair pair =
            gen_function_pair(derive_seed(61, "pair", k), families[k % families.size()]);
        MeasureContext ctx(phi, rho.rho, pair);
        BlockDiagonalElement a = gen_element(derive_seed(61, "a", k), shape);
        BlockDiagonalElement b = gen_element(derive_seed(61, "b", k), shape);
        BlockDiagonalElement prod = gen_correlation(ctx, a, b);
        BlockDiagonalElement oracle = spectral_sum_correlation(ctx, a, b);
        CHECK((prod - oracle).frobenius_norm() <=
              1e-9 * std::max(1.0, prod.frobenius_norm()));
    }
}

TEST_CASE("spectral-sum two-term fixture and degenerate spectrum") {
    // diagonal rho, Hermitian A with one off-diagonal pair:
    // skew = (f1 - f2)(g1 - g2) |a|^2 under the scalar trace
    double l1 = 0.75, l2 = 0.25;
    cplx aval(0.3, -0.4);
    ComplexMatrix am(2, 2);
    am(0, 1) = aval;
    am(1, 0) = std::conj(aval);
    FunctionPair pair{ScalarFunction::power(0.7), ScalarFunction::power(0.2)};
    MeasureContext ctx(TracialMap::scalar_trace(kQubit), qubit(diag2(l1, l2)), pair);
    double f1 = std::pow(l1, 0.7), f2 = std::pow(l2, 0.7);
    double g1 = std::pow(l1, 0.2), g2 = std::pow(l2, 0.2);
    double want = (f1 - f2) * (g1 - g2) * std::norm(aval);
    CHECK(scalar(spectral_sum_correlation(ctx, qubit(am), qubit(am))).real() ==
          doctest::Approx(want).epsilon(1e-12));
    CHECK(scalar(skew_information(ctx, qubit(am))).real() ==
          doctest::Approx(want).epsilon(1e-12));

    // rho with a fully degenerate spectrum: one eigenprojection, zero correlation
    MeasureContext flat(TracialMap::scalar_trace(kQubit), qubit(diag2(0.5, 0.5)), pair);
    CHECK(eigenprojections(flat.rho()).size() == 1);
    BlockDiagonalElement x = gen_element(9, kQubit);
    BlockDiagonalElement y = gen_element(10, kQubit);
    CHECK(spectral_sum_correlation(flat, x, y).frobenius_norm() <= 1e-12);
}

TEST_CASE("eigenprojections resolve the identity") {
    AlgebraShape shape{{3, 2}};
    BlockDiagonalElement rho =
        gen_density(71, TracialMap::block_trace(shape)).rho;
    auto projections = eigenprojections(rho);
    BlockDiagonalElement sum = BlockDiagonalElement::zero(shape);
    BlockDiagonalElement rebuilt = BlockDiagonalElement::zero(shape);
    for (const auto& [lambda, e] : projections) {
        sum = sum + e;
        rebuilt = rebuilt + e * cplx(lambda);
    }
    CHECK((sum - BlockDiagonalElement::identity(shape)).frobenius_norm() <= 1e-9);
    CHECK((rebuilt - rho).frobenius_norm() <= 1e-8);
}

TEST_CASE("alpha context endpoints") {
    BlockDiagonalElement rho = qubit(diag2(0.6, 0.4));
    TracialMap phi = TracialMap::scalar_trace(kQubit);

    MeasureContext wy = alpha_context(phi, rho, 0.5);
    CHECK(wy.pair().f.to_string() == ScalarFunction::power(0.5).to_string());
    CHECK(wy.pair().g.to_string() == ScalarFunction::power(0.5).to_string());

    // alpha = 0: g = x^0 = 1 on the positive spectrum, so Corr vanishes
    MeasureContext zero = alpha_context(phi, rho, 0.0);
    BlockDiagonalElement x = gen_element(11, kQubit);
    BlockDiagonalElement y = gen_element(12, kQubit);
    CHECK(gen_correlation(zero, x, y).frobenius_norm() <= 1e-12);

    CHECK_THROWS_AS(alpha_context(phi, rho, 1.5), DomainViolation);
}

TEST_CASE("measure outputs are Hermitian for Hermitian inputs") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        AlgebraShape shape{{3}};
        TracialMap phi = TracialMap::scalar_trace(shape);
        DensityElement rho = gen_density(derive_seed(73, "rho", k), phi);
        MeasureContext ctx = alpha_context(phi, rho.rho, 0.3 + 0.4 * (k % 2));
        BlockDiagonalElement a = gen_hermitian_element(derive_seed(73, "a", k), shape);
        CHECK(gen_variance(ctx, a).hermiticity_defect() <= 1e-10);
        CHECK(skew_information(ctx, a).hermiticity_defect() <= 1e-10);
    }
}

TEST_CASE("simultaneously diagonal rho and A give zero skew information") {
    AlgebraShape shape{{2, 2}};
    std::vector<ComplexMatrix> rb{diag2(0.4, 0.1), diag2(0.3, 0.2)};
    std::vector<ComplexMatrix> ab{diag2(1.0, -2.0), diag2(0.5, 4.0)};
    MeasureContext ctx = alpha_context(TracialMap::block_trace(shape),
                                       BlockDiagonalElement(shape, rb), 0.25);
    BlockDiagonalElement a(shape, ab);
    CHECK(skew_information(ctx, a).frobenius_norm() <= 1e-10);
}

TEST_CASE("classical reduction matches plain trace covariance") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        AlgebraShape shape{{3}};
        TracialMap phi = TracialMap::scalar_trace(shape);
        DensityElement rho = gen_density(derive_seed(79, "rho", k), phi);
        MeasureContext ctx(phi, rho.rho,
                           {ScalarFunction::identity(), ScalarFunction::constant(1.0)});
        BlockDiagonalElement a = gen_element(derive_seed(79, "a", k), shape);
        BlockDiagonalElement b = gen_element(derive_seed(79, "b", k), shape);
        cplx got = scalar(gen_covariance(ctx, a, b));
        cplx want = (rho.rho * a.adjoint() * b).trace() -
                    (rho.rho * a.adjoint()).trace() * (rho.rho * b).trace();
        CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("with_route switches gen_correlation to the oracle") {
    MeasureContext ctx = alpha_context(TracialMap::scalar_trace(kQubit),
                                       qubit(diag2(0.8, 0.2)), 0.35);
    MeasureContext oracle = ctx.with_route(CorrRoute::spectral_sum);
    CHECK(oracle.route() == CorrRoute::spectral_sum);
    BlockDiagonalElement a = gen_element(13, kQubit);
    CHECK((gen_correlation(ctx, a, a) - gen_correlation(oracle, a, a)).frobenius_norm() <=
          1e-10);
}
