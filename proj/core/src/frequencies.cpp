#include "wl/frequencies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wl {

DesiredFrequencies::DesiredFrequencies(std::vector<double> phi) : phi_(std::move(phi)) {
    if (phi_.size() < 2) throw std::invalid_argument("DesiredFrequencies: need at least 2 bins");
    for (const double p : phi_) {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("DesiredFrequencies: entries must lie strictly in (0,1)");
    }
    const double sum = std::accumulate(phi_.begin(), phi_.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("DesiredFrequencies: entries must sum to 1 (within 1e-12)");
}

double DesiredFrequencies::min_margin() const {
    double m = 1.0;
    for (const double p : phi_) m = std::min({m, p, 1.0 - p});
    return m;
}

}  // namespace wl
