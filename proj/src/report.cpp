#include "qitineq/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qitineq {

double MarginReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& [label, value] : margins) m = std::min(m, value);
    return m;
}

void MarginReport::finalize() {
    passed = true;
    boundary = false;
    for (const auto& [label, value] : margins) {
        if (value < -tolerance) passed = false;
        if (std::abs(value) <= tolerance) boundary = true;
    }
}

}  // namespace qitineq
