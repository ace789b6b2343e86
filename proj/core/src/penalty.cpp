#include "wl/penalty.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wl {

PenaltyState::PenaltyState(std::vector<double> log_theta) : log_theta_(std::move(log_theta)) {
    if (log_theta_.size() < 2) throw std::invalid_argument("PenaltyState: need at least 2 bins");
    for (const double v : log_theta_) {
        if (!std::isfinite(v)) throw std::invalid_argument("PenaltyState: entries must be finite");
    }
}

PenaltyState PenaltyState::uniform(int d) {
    if (d < 2) throw std::invalid_argument("PenaltyState::uniform: need at least 2 bins");
    return PenaltyState(std::vector<double>(static_cast<std::size_t>(d),
                                            -std::log(static_cast<double>(d))));
}

double PenaltyState::z(int i, int j) const {
    return log_theta_[static_cast<std::size_t>(i - 1)] - log_theta_[static_cast<std::size_t>(j - 1)];
}

void PenaltyState::recenter() {
    const double mean =
        std::accumulate(log_theta_.begin(), log_theta_.end(), 0.0) /
        static_cast<double>(log_theta_.size());
    for (double& v : log_theta_) v -= mean;
}

}  // namespace wl
