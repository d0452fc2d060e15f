#pragma once

#include <json.hpp>

#include "qitineq/checks.hpp"
#include "qitineq/instances.hpp"

namespace qitineq {

// A verification campaign: every requested checker evaluated over
// deterministically derived random instances.
struct CampaignConfig {
    std::vector<std::string> checks;  // validated check ids
    std::size_t instances_per_check = 100;
    std::uint64_t seed = 0;
    std::vector<AlgebraShape> shapes = {AlgebraShape{{2}}};
    std::vector<MapKind> map_kinds = {MapKind::scalar_trace, MapKind::block_trace,
                                      MapKind::center_expectation, MapKind::doubling};
    std::vector<PairFamily> pair_families = {PairFamily::alpha_powers,
                                             PairFamily::random_powers,
                                             PairFamily::poly_exp_mix};
    double tolerance = 1e-9;

    void validate() const;
};

struct CheckSummary {
    std::string check_id;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::size_t regenerated = 0;  // precondition-failed draws replaced
    double min_margin = 0.0;
};

struct CampaignResult {
    std::vector<MarginReport> reports;  // ordered by (check position, instance index)
    std::vector<CheckSummary> summaries;
    std::size_t total_violations() const;
};

const std::vector<std::string>& all_check_ids();
bool is_known_check(const std::string& check_id);

CampaignResult run_campaign(const CampaignConfig& config);

// Single instance of one checker, derived from (master seed, check id, index).
// Exposed for the acceptance harness.
MarginReport run_check_instance(const CampaignConfig& config, const std::string& check_id,
                                std::uint64_t index, std::size_t* regenerated = nullptr);

nlohmann::json campaign_to_json(const CampaignConfig& config, const CampaignResult& result);
std::string summary_table(const CampaignResult& result);

}  // namespace qitineq
