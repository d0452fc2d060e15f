#include "qitineq/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "qitineq/json_io.hpp"

namespace qitineq {

namespace {

const std::vector<std::string> kAllChecks = {
    "classical_heisenberg",
    "classical_schrodinger",
    "classical_corr_cs",
    "variance_covariance",
    "var_cov_matrix",
    "schrodinger_commutative",
    "kadison",
    "heisenberg_general",
    "skew_positivity",
    "skew_sum_nonneg",
    "corr_cs_matrix",
    "corr_cs_norm",
    "conditional_expectation_cs",
    "chain",
    "alpha_chain",
};

bool contains_kind(const std::vector<MapKind>& kinds, MapKind k) {
    return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

// map kinds a checker's preconditions admit
std::vector<MapKind> applicable_kinds(const std::string& check_id,
                                      const std::vector<MapKind>& requested) {
    std::vector<MapKind> allowed;
    if (check_id == "classical_heisenberg" || check_id == "classical_schrodinger" ||
        check_id == "classical_corr_cs" || check_id == "variance_covariance") {
        allowed = {MapKind::scalar_trace};
    } else if (check_id == "schrodinger_commutative") {
        allowed = {MapKind::scalar_trace, MapKind::block_trace};
    } else if (check_id == "conditional_expectation_cs") {
        allowed = {MapKind::center_expectation};
    } else {
        allowed = {MapKind::scalar_trace, MapKind::block_trace,
                   MapKind::center_expectation, MapKind::doubling};
    }
    std::vector<MapKind> out;
    for (MapKind k : allowed)
        if (contains_kind(requested, k)) out.push_back(k);
    return out;
}

bool needs_positive_pair(const std::string& check_id) {
    return check_id == "schrodinger_commutative" || check_id == "heisenberg_general" ||
           check_id == "chain";
}

bool uses_pair_family(const std::string& check_id) {
    return check_id == "var_cov_matrix" || check_id == "schrodinger_commutative" ||
           check_id == "heisenberg_general" || check_id == "skew_positivity" ||
           check_id == "skew_sum_nonneg" || check_id == "corr_cs_matrix" ||
           check_id == "corr_cs_norm" || check_id == "conditional_expectation_cs" ||
           check_id == "chain";
}

std::vector<PairFamily> applicable_families(const std::string& check_id,
                                            const std::vector<PairFamily>& requested) {
    if (!uses_pair_family(check_id)) return requested;
    std::vector<PairFamily> out;
    for (PairFamily f : requested) {
        // a pair with negative g violates the positivity preconditions
        if (needs_positive_pair(check_id) && f == PairFamily::adversarial_non_monotone)
            continue;
        out.push_back(f);
    }
    return out;
}

TracialMap build_map(MapKind kind, const AlgebraShape& shape) {
    return TracialMap::make(kind, shape);
}

MarginReport dispatch(const CampaignConfig& config, const std::string& check_id,
                      std::uint64_t seed, const std::vector<MapKind>& kinds,
                      const std::vector<PairFamily>& families) {
    Rng rng(seed);
    const AlgebraShape& shape = config.shapes[rng.next_index(config.shapes.size())];
    MapKind kind = kinds[rng.next_index(kinds.size())];
    TracialMap phi = build_map(kind, shape);
    const AlgebraShape& domain = phi.domain_shape();

    DensityElement rho = gen_density(derive_seed(seed, "rho", 0), phi);
    BlockDiagonalElement a = gen_hermitian_element(derive_seed(seed, "A", 0), domain);
    BlockDiagonalElement b = gen_hermitian_element(derive_seed(seed, "B", 0), domain);

    if (check_id == "classical_heisenberg") return check_classical_heisenberg(rho, a, b);
    if (check_id == "classical_schrodinger") return check_classical_schrodinger(rho, a, b);
    if (check_id == "classical_corr_cs") {
        double alpha = Rng(derive_seed(seed, "alpha", 0)).uniform(0.0, 1.0);
        return check_classical_corr_cs(rho, alpha, a, b);
    }
    if (check_id == "variance_covariance")
        return check_variance_covariance_classical(rho, a, b);
    if (check_id == "alpha_chain") {
        double alpha = Rng(derive_seed(seed, "alpha", 0)).uniform(0.0, 1.0);
        return check_alpha_chain(rho, alpha, a);
    }
    if (check_id == "kadison") {
        BlockDiagonalElement x = gen_element(derive_seed(seed, "X", 0), domain);
        BlockDiagonalElement g = gen_element(derive_seed(seed, "G", 0), domain);
        BlockDiagonalElement pos =
            g.adjoint() * g + BlockDiagonalElement::identity(domain) * cplx(0.1);
        return kadison_check(phi, x, pos);
    }

    PairFamily family = families[rng.next_index(families.size())];
    FunctionPair pair = gen_function_pair(derive_seed(seed, "pair", 0), family);
    bool allow = family == PairFamily::adversarial_non_monotone;
    MeasureContext ctx(phi, rho.rho, pair);

    if (check_id == "var_cov_matrix") return check_var_cov_matrix(ctx, a, b);
    if (check_id == "schrodinger_commutative")
        return check_schrodinger_commutative(ctx, a, b);
    if (check_id == "heisenberg_general") return check_heisenberg_general(ctx, a, b);
    if (check_id == "skew_positivity") return check_skew_positivity(ctx, a, allow);
    if (check_id == "skew_sum_nonneg") {
        BlockDiagonalElement x = gen_element(derive_seed(seed, "X", 0), domain);
        return check_skew_sum_nonneg(ctx, x, allow);
    }
    if (check_id == "corr_cs_matrix") return check_corr_cs_matrix(ctx, a, b, allow);
    if (check_id == "corr_cs_norm") return check_corr_cs_norm(ctx, a, b, allow);
    if (check_id == "conditional_expectation_cs")
        return check_conditional_expectation_cs(ctx, a, b, allow);
    if (check_id == "chain") {
        BlockDiagonalElement x = gen_element(derive_seed(seed, "X", 0), domain);
        return check_chain(ctx, x);
    }
    throw ParseError("unknown check id: " + check_id);
}

}  // namespace

void CampaignConfig::validate() const {
    if (instances_per_check < 1) throw ParseError("instances_per_check must be >= 1");
    if (tolerance <= 0.0) throw ParseError("tolerance must be positive");
    if (checks.empty()) throw ParseError("no checks requested");
    for (const auto& id : checks)
        if (!is_known_check(id)) throw ParseError("unknown check id: " + id);
    if (shapes.empty()) throw ParseError("no shapes given");
    if (map_kinds.empty()) throw ParseError("no map kinds given");
    if (pair_families.empty()) throw ParseError("no pair families given");
    for (const auto& s : shapes) s.validate();
}

std::size_t CampaignResult::total_violations() const {
    std::size_t n = 0;
    for (const auto& s : summaries) n += s.violations;
    return n;
}

const std::vector<std::string>& all_check_ids() { return kAllChecks; }

bool is_known_check(const std::string& check_id) {
    return std::find(kAllChecks.begin(), kAllChecks.end(), check_id) != kAllChecks.end();
}

MarginReport run_check_instance(const CampaignConfig& config, const std::string& check_id,
                                std::uint64_t index, std::size_t* regenerated) {
    auto kinds = applicable_kinds(check_id, config.map_kinds);
    auto families = applicable_families(check_id, config.pair_families);
    if (kinds.empty() || families.empty())
        throw WrongKind("run_check_instance: no applicable map kinds or pair families");

    constexpr std::size_t kMaxAttempts = 64;
    std::uint64_t seed = derive_seed(config.seed, check_id, index);
    for (std::size_t attempt = 0;; ++attempt) {
        try {
            MarginReport report = dispatch(config, check_id, seed, kinds, families);
            report.instance_seed = seed;
            report.tolerance = config.tolerance;
            report.finalize();
            return report;
        } catch (const SingularNormalizer&) {
        } catch (const SingularB&) {
        } catch (const DegenerateBlock&) {
        } catch (const DomainViolation&) {
        }
        if (attempt + 1 >= kMaxAttempts)
            throw NoConvergence("run_check_instance: could not draw a valid instance");
        if (regenerated) ++*regenerated;
        seed = derive_seed(seed, "regen", attempt);
    }
}

CampaignResult run_campaign(const CampaignConfig& config) {
    config.validate();
    CampaignResult result;
    for (const auto& check_id : config.checks) {
        CheckSummary summary;
        summary.check_id = check_id;
        summary.min_margin = std::numeric_limits<double>::infinity();

        auto kinds = applicable_kinds(check_id, config.map_kinds);
        auto families = applicable_families(check_id, config.pair_families);
        if (kinds.empty() || families.empty()) {
            summary.min_margin = 0.0;  // skipped: nothing applicable was requested
            result.summaries.push_back(std::move(summary));
            continue;
        }
        for (std::size_t i = 0; i < config.instances_per_check; ++i) {
            MarginReport report =
                run_check_instance(config, check_id, i, &summary.regenerated);
            summary.instances += 1;
            summary.min_margin = std::min(summary.min_margin, report.min_margin());
            if (!report.passed) summary.violations += 1;
            result.reports.push_back(std::move(report));
        }
        result.summaries.push_back(std::move(summary));
    }
    return result;
}

nlohmann::json campaign_to_json(const CampaignConfig& config, const CampaignResult& result) {
    nlohmann::json kinds = nlohmann::json::array();
    for (MapKind k : config.map_kinds) kinds.push_back(map_kind_name(k));
    nlohmann::json families = nlohmann::json::array();
    for (PairFamily f : config.pair_families) families.push_back(pair_family_name(f));

    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : result.reports) reports.push_back(report_to_json(r));

    nlohmann::json summaries = nlohmann::json::array();
    for (const auto& s : result.summaries)
        summaries.push_back(nlohmann::json{{"check_id", s.check_id},
                                           {"instances", s.instances},
                                           {"violations", s.violations},
                                           {"regenerated", s.regenerated},
                                           {"min_margin", s.min_margin}});

    return nlohmann::json{
        {"config",
         {{"checks", config.checks},
          {"instances_per_check", config.instances_per_check},
          {"seed", config.seed},
          {"shapes", shapes_to_string(config.shapes)},
          {"map_kinds", std::move(kinds)},
          {"pair_families", std::move(families)},
          {"tolerance", config.tolerance}}},
        {"summary", std::move(summaries)},
        {"reports", std::move(reports)}};
}

std::string summary_table(const CampaignResult& result) {
    std::ostringstream os;
    os << std::left << std::setw(28) << "check" << std::right << std::setw(10)
       << "instances" << std::setw(14) << "min margin" << std::setw(11) << "violations"
       << std::setw(8) << "status" << '\n';
    os << std::string(71, '-') << '\n';
    for (const auto& s : result.summaries) {
        os << std::left << std::setw(28) << s.check_id << std::right << std::setw(10)
           << s.instances;
        if (s.instances == 0) {
            os << std::setw(14) << "-" << std::setw(11) << 0 << std::setw(8) << "skip"
               << '\n';
            continue;
        }
        os << std::setw(14) << std::scientific << std::setprecision(6) << s.min_margin
           << std::setw(11) << s.violations << std::setw(8)
           << (s.violations == 0 ? "ok" : "FAIL") << '\n';
        os.unsetf(std::ios::scientific);
    }
    return os.str();
}

}  // namespace qitineq
