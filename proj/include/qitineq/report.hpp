#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qitineq {

// Outcome of one theorem check on one instance. Margins are minimum
// eigenvalues of the claimed-positive operators, normalized by
// max(1, ||operator||_F).
struct MarginReport {
    std::string check_id;
    std::uint64_t instance_seed = 0;
    std::vector<std::pair<std::string, double>> margins;
    bool passed = false;
    bool boundary = false;  // some margin within +/- tolerance of zero
    double tolerance = 1e-9;
    double scale = 0.0;     // Frobenius norm of the primary operator tested

    void add_margin(std::string label, double value) {
        margins.emplace_back(std::move(label), value);
    }
    double min_margin() const;
    // passed <=> every margin >= -tolerance
    void finalize();
};

}  // namespace qitineq
