#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qitineq/campaign.hpp"
#include "qitineq/json_io.hpp"

using namespace qitineq;

TEST_CASE("seed derivation and generation are deterministic") {
    CHECK(derive_seed(42, "stream", 7) == derive_seed(42, "stream", 7));
    CHECK(derive_seed(42, "stream", 7) != derive_seed(42, "stream", 8));
    CHECK(derive_seed(42, "stream", 7) != derive_seed(42, "other", 7));
    CHECK(derive_seed(42, "stream", 7) != derive_seed(43, "stream", 7));

    CHECK(gen_matrix(5, 4) == gen_matrix(5, 4));
    CHECK(gen_hermitian(5, 4) == gen_hermitian(5, 4));
    CHECK_FALSE(gen_matrix(5, 4) == gen_matrix(6, 4));
}

TEST_CASE("rng doubles stay in [0, 1)") {
    Rng rng(123);
    for (int i = 0; i < 10000; ++i) {
        double d = rng.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
}

TEST_CASE("generated Hermitian matrices are exactly Hermitian with rich spectra") {
    bool saw_positive = false, saw_negative = false;
    for (std::uint64_t k = 0; k < 100; ++k) {
        ComplexMatrix h = gen_hermitian(derive_seed(1, "h", k), 4);
        CHECK(h.hermiticity_defect() == 0.0);
        HermitianSpectrum s = eig_hermitian(h);
        if (s.eigenvalues.front() < 0) saw_negative = true;
        if (s.eigenvalues.back() > 0) saw_positive = true;
    }
    CHECK(saw_positive);
    CHECK(saw_negative);
}

TEST_CASE("generated densities are valid and strictly positive") {
    AlgebraShape shape{{2, 2}};
    TracialMap scalar = TracialMap::scalar_trace(shape);
    TracialMap block = TracialMap::block_trace(shape);

    DensityElement d1 = gen_density(3, scalar);
    CHECK(d1.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));

    DensityElement d2 = gen_density(3, block);
    for (const auto& b : d2.rho.blocks())
        CHECK(b.trace().real() == doctest::Approx(1.0).epsilon(1e-12));

    for (std::uint64_t k = 0; k < 1000; ++k) {
        DensityElement d = gen_density(derive_seed(5, "rho", k), scalar);
        CHECK(element_min_eigenvalue(d.rho.hermitized()) >= 1e-7);
    }
}

TEST_CASE("function pair families") {
    // alpha_powers at the Wigner-Yanase point: exponents sum to 1
    for (std::uint64_t k = 0; k < 50; ++k) {
        FunctionPair p = gen_function_pair(derive_seed(7, "ap", k), PairFamily::alpha_powers);
        const auto& f = std::get<ScalarFunction::Power>(p.f.spec);
        const auto& g = std::get<ScalarFunction::Power>(p.g.spec);
        CHECK(f.exponent + g.exponent == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.certify_same_monotone({0.25, 0.75}));
    }

    for (std::uint64_t k = 0; k < 50; ++k) {
        FunctionPair p =
            gen_function_pair(derive_seed(7, "rp", k), PairFamily::random_powers);
        CHECK(p.certify_same_monotone({0.1, 0.5, 2.0}));
    }

    for (std::uint64_t k = 0; k < 50; ++k) {
        FunctionPair p =
            gen_function_pair(derive_seed(7, "pe", k), PairFamily::poly_exp_mix);
        CHECK(p.certify_same_monotone({0.1, 0.5, 2.0}));
        CHECK(p.f.eval(0.0) > 0.0);  // positive constant term
    }

    FunctionPair adv =
        gen_function_pair(11, PairFamily::adversarial_non_monotone);
    CHECK_FALSE(adv.certify_same_monotone({0.25, 0.75}));

    for (PairFamily f : {PairFamily::alpha_powers, PairFamily::random_powers,
                         PairFamily::poly_exp_mix, PairFamily::adversarial_non_monotone})
        CHECK(pair_family_from_name(pair_family_name(f)) == f);
}

TEST_CASE("matrix and element JSON round-trips") {
    ComplexMatrix m = gen_matrix(13, 3);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    BlockDiagonalElement x = gen_element(14, AlgebraShape{{2, 3}});
    CHECK(element_from_json(element_to_json(x)) == x);

    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 2}}), ParseError);
}

TEST_CASE("map JSON round-trips including doubling") {
    for (MapKind kind : {MapKind::scalar_trace, MapKind::block_trace,
                         MapKind::center_expectation}) {
        TracialMap phi = TracialMap::make(kind, AlgebraShape{{2, 3}});
        TracialMap back = map_from_json(map_to_json(phi));
        CHECK(back.kind() == kind);
        CHECK(back.domain_shape() == phi.domain_shape());
    }
    TracialMap psi = TracialMap::doubling(TracialMap::block_trace(AlgebraShape{{2, 2}}));
    TracialMap back = map_from_json(map_to_json(psi));
    CHECK(back.kind() == MapKind::doubling);
    CHECK(back.inner().kind() == MapKind::block_trace);
    CHECK(back.domain_shape() == psi.domain_shape());
}

TEST_CASE("report JSON round-trips") {
    MarginReport r;
    r.check_id = "kadison";
    r.instance_seed = 0xDEADBEEFULL;
    r.scale = 2.5;
    r.add_margin("kadison", 0.123456789012345678);
    r.add_margin("aux", -3.5e-12);
    r.finalize();
    MarginReport back = report_from_json(report_to_json(r));
    CHECK(back.check_id == r.check_id);
    CHECK(back.instance_seed == r.instance_seed);
    CHECK(back.margins == r.margins);  // bitwise double round-trip
    CHECK(back.passed == r.passed);
    CHECK(back.boundary == r.boundary);
    CHECK(back.scale == r.scale);
}

TEST_CASE("shape string parsing") {
    std::vector<AlgebraShape> shapes = parse_shapes("2,2;3");
    REQUIRE(shapes.size() == 2);
    CHECK(shapes[0] == AlgebraShape{{2, 2}});
    CHECK(shapes[1] == AlgebraShape{{3}});
    CHECK(shapes_to_string(shapes) == "2,2;3");
    CHECK_THROWS_AS(parse_shapes("2,x"), ParseError);
    CHECK_THROWS_AS(parse_shapes("0"), ParseError);
}

TEST_CASE("campaign validation and determinism") {
    CampaignConfig config;
    config.checks = {"kadison", "skew_positivity", "chain"};
    config.instances_per_check = 20;
    config.seed = 2024;
    config.shapes = {AlgebraShape{{2}}, AlgebraShape{{3}}};

    CampaignResult r1 = run_campaign(config);
    CampaignResult r2 = run_campaign(config);
    CHECK(campaign_to_json(config, r1).dump() == campaign_to_json(config, r2).dump());
    CHECK(r1.total_violations() == 0);
    REQUIRE(r1.summaries.size() == 3);
    for (const auto& s : r1.summaries) {
        CHECK(s.instances == 20);
        CHECK(s.min_margin >= -1e-9);
    }

    CampaignConfig bad = config;
    bad.checks = {"bogus"};
    CHECK_THROWS_AS(run_campaign(bad), ParseError);
    bad = config;
    bad.instances_per_check = 0;
    CHECK_THROWS_AS(bad.validate(), ParseError);
}

TEST_CASE("adversarial campaigns record violations") {
    CampaignConfig config;
    config.checks = {"skew_positivity"};
    config.instances_per_check = 100;
    config.seed = 7;
    config.pair_families = {PairFamily::adversarial_non_monotone};
    CampaignResult r = run_campaign(config);
    CHECK(r.total_violations() > 0);
    CHECK(r.summaries[0].min_margin < -1e-6);
}
