#include "wl/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wl {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

ChainState make_chain_state(const PartitionedTarget& target, double x0) {
    const int bin = bin_of(target, x0);  // throws if outside the support
    const double lp = target.log_density(x0);
    if (!std::isfinite(lp))
        throw std::invalid_argument("make_chain_state: x0 has zero target density");
    return ChainState{x0, bin, lp};
}

double mh_log_accept_ratio(double log_pi_x, double log_pi_y, double log_q_xy, double log_q_yx,
                           double log_theta_x, double log_theta_y) {
    if (log_pi_y == kNegInf) return kNegInf;
    return (log_pi_y - log_pi_x) + (log_q_yx - log_q_xy) + (log_theta_x - log_theta_y);
}

ChainState mh_step(const PartitionedTarget& target, const ProposalKernel& proposal,
                   const PenaltyState& p, const ChainState& s, Rng& rng) {
    const double y = proposal.sample(s.x, rng);

    double log_alpha = kNegInf;
    int bin_y = 0;
    double log_pi_y = kNegInf;
    if (y >= target.lo() && y <= target.hi()) {
        log_pi_y = target.log_density(y);
        if (std::isfinite(log_pi_y)) {
            bin_y = bin_of(target, y);
            log_alpha = mh_log_accept_ratio(s.log_pi_x, log_pi_y, proposal.log_q(s.x, y),
                                            proposal.log_q(y, s.x), p.log_theta(s.bin),
                                            p.log_theta(bin_y));
        }
    }

    const double alpha = std::exp(std::min(0.0, log_alpha));
    const double u = uniform01(rng);  // drawn unconditionally: stream stays aligned
    if (u < alpha) return ChainState{y, bin_y, log_pi_y};
    return s;
}

}  // namespace wl
