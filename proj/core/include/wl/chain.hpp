#pragma once

#include "wl/penalty.hpp"
#include "wl/proposal.hpp"
#include "wl/rng.hpp"
#include "wl/target.hpp"

namespace wl {

struct ChainState {
    double x;
    int bin;          // J(x), 1-based
    double log_pi_x;  // cached log pi(x), finite
};

// Validates x0: inside the support and with finite log-density.
ChainState make_chain_state(const PartitionedTarget& target, double x0);

// log of the Metropolis-Hastings acceptance ratio for the penalized target:
//   [log pi(y) - log pi(x)] + [log Q(y,x) - log Q(x,y)] + [log theta(J(x)) - log theta(J(y))]
// The penalty term favours moves out of over-penalized bins.
double mh_log_accept_ratio(double log_pi_x, double log_pi_y,
                           double log_q_xy, double log_q_yx,
                           double log_theta_x, double log_theta_y);

// One Metropolis-Hastings transition of K_theta.  Proposals outside the
// support (or onto zero density) are rejected.  The acceptance uniform is
// drawn on every call so penalty-shifted runs consume identical streams.
ChainState mh_step(const PartitionedTarget& target, const ProposalKernel& proposal,
                   const PenaltyState& p, const ChainState& s, Rng& rng);

}  // namespace wl
