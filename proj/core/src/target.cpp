#include "wl/target.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wl {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

PartitionedTarget::PartitionedTarget(std::function<double(double)> log_density,
                                     std::vector<double> bin_edges)
    : log_density_(std::move(log_density)), edges_(std::move(bin_edges)) {
    if (!log_density_) throw std::invalid_argument("PartitionedTarget: null log-density");
    if (edges_.size() < 3)
        throw std::invalid_argument("PartitionedTarget: need at least 2 bins (3 edges)");
    for (std::size_t k = 0; k + 1 < edges_.size(); ++k) {
        if (!(edges_[k] < edges_[k + 1]))
            throw std::invalid_argument("PartitionedTarget: bin edges must be strictly increasing");
    }
    if (!std::isfinite(edges_.front()) || !std::isfinite(edges_.back()))
        throw std::invalid_argument("PartitionedTarget: support must be a compact interval");
}

double PartitionedTarget::log_density(double x) const {
    if (x < lo() || x > hi()) return kNegInf;
    return log_density_(x);
}

int bin_of(const PartitionedTarget& target, double x) {
    if (!(x >= target.lo() && x <= target.hi()))
        throw std::domain_error("bin_of: point outside the support");
    const auto& e = target.edges();
    // first interior-or-final edge >= x; boundary points land in the left bin
    const auto it = std::lower_bound(e.begin() + 1, e.end(), x);
    return static_cast<int>(it - (e.begin() + 1)) + 1;
}

double penalized_log_density(const PartitionedTarget& target, const PenaltyState& p, double x) {
    return target.log_density(x) - p.log_theta(bin_of(target, x));
}

PartitionedTarget truncated_normal_target(double mean, double sd, std::vector<double> bin_edges) {
    if (!(sd > 0.0)) throw std::invalid_argument("truncated_normal_target: sd must be positive");
    return PartitionedTarget(
        [mean, sd](double x) {
            const double u = (x - mean) / sd;
            return -0.5 * u * u;
        },
        std::move(bin_edges));
}

PartitionedTarget uniform_target(std::vector<double> bin_edges) {
    return PartitionedTarget([](double) { return 0.0; }, std::move(bin_edges));
}

}  // namespace wl
