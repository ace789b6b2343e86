#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "wl/chain.hpp"
#include "wl/schedule.hpp"
#include "wl/trace.hpp"

namespace wl {

struct RunOptions {
    long long stride = 1;
    std::optional<double> x0;         // default: support midpoint
    long long recenter_every = 10000; // 0 disables log-theta recentring
};

// Wang-Landau with the deterministic schedule gamma_t = t^-alpha:
// sample from K_{theta_{t-1}}, then update the penalties.
// theta_0(i) = 1/d.
RunTrace run_wl_deterministic(const PartitionedTarget& target, const ProposalKernel& proposal,
                              UpdateRule rule, const DesiredFrequencies& phi, double alpha,
                              long long steps, std::uint64_t seed, const RunOptions& opts = {});

// Wang-Landau with the flat-histogram schedule: gamma decreases (by
// params.gamma_decay) only when the FH criterion fires, at which point the
// visit counters reset.  The update at a firing iteration already uses the
// decremented gamma, matching the check-then-update loop order.
RunTrace run_wl_fh(const PartitionedTarget& target, const ProposalKernel& proposal,
                   UpdateRule rule, const DesiredFrequencies& phi, const FhParams& params,
                   long long steps, std::uint64_t seed, const RunOptions& opts = {});

// Runs n independent replicas on a bounded worker pool; replica r uses
// replica_seed(master_seed, r).  Results are ordered by replica index.
std::vector<RunTrace> run_replicas(int n_replicas, std::uint64_t master_seed, unsigned workers,
                                   const std::function<RunTrace(std::uint64_t)>& run_one);

}  // namespace wl
