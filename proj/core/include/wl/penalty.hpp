#pragma once

#include <vector>

namespace wl {

// Log-domain penalty vector log theta.  Only differences log theta_i - log theta_j
// enter the sampler, so the state is canonical up to an additive constant;
// recenter() exploits that to keep the entries bounded on long runs.
class PenaltyState {
public:
    explicit PenaltyState(std::vector<double> log_theta);

    // theta_0(i) = 1/d, i.e. log theta = -log d everywhere.
    static PenaltyState uniform(int d);

    int size() const { return static_cast<int>(log_theta_.size()); }
    double log_theta(int bin) const { return log_theta_[static_cast<std::size_t>(bin - 1)]; }  // 1-based bin
    const std::vector<double>& values() const { return log_theta_; }
    std::vector<double>& values() { return log_theta_; }

    // Z^{(i,j)} = log theta_i - log theta_j, 1-based indices.
    double z(int i, int j) const;

    // Subtract the mean entry; all Z ratios are unchanged up to rounding.
    void recenter();

private:
    std::vector<double> log_theta_;
};

}  // namespace wl
