#pragma once

#include <functional>
#include <vector>

#include "wl/penalty.hpp"

namespace wl {

// Unnormalized log-density on a compact interval together with a bin partition.
// The support is [edges.front(), edges.back()]; log_density returns -inf
// outside it.  Bins follow the right-closed convention: bin 1 is
// [e_0, e_1], bin i>1 is ]e_{i-1}, e_i], so boundary points belong to the
// bin on their left.
class PartitionedTarget {
public:
    PartitionedTarget(std::function<double(double)> log_density, std::vector<double> bin_edges);

    double lo() const { return edges_.front(); }
    double hi() const { return edges_.back(); }
    int num_bins() const { return static_cast<int>(edges_.size()) - 1; }
    const std::vector<double>& edges() const { return edges_; }

    // -inf outside the support, the raw (unnormalized) log pi inside.
    double log_density(double x) const;

private:
    std::function<double(double)> log_density_;
    std::vector<double> edges_;
};

// Bin index J(x) in 1..d.  Throws std::domain_error for x outside the support.
int bin_of(const PartitionedTarget& target, double x);

// log pi(x) - log theta(J(x)), the unnormalized log of the penalized target.
double penalized_log_density(const PartitionedTarget& target, const PenaltyState& p, double x);

// Standard normal with given mean/sd truncated to [edges.front(), edges.back()].
PartitionedTarget truncated_normal_target(double mean, double sd, std::vector<double> bin_edges);

// Flat density on the support.
PartitionedTarget uniform_target(std::vector<double> bin_edges);

}  // namespace wl
