#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wl/config.hpp"
#include "wl/trace.hpp"

namespace wl {

struct ReplicaSummary {
    int replica = 0;
    std::uint64_t seed = 0;
    long long steps = 0;
    long long kappa = 0;
    long long fh_events = 0;
    std::vector<double> final_freq;
    std::vector<double> last_half_freq;
    std::vector<double> final_z;  // pairs (i<j)
};

struct ExperimentResult {
    std::vector<ReplicaSummary> replicas;
    std::vector<std::string> artifacts;  // files written
};

// Runs the configured replicas on a worker pool (workers = 0: hardware
// concurrency) and writes per-replica trace/FH CSVs, a frequency SVG per
// replica, an FH waiting-time CSV and summary.csv under the output directory.
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned workers = 0);

void write_summary_csv(std::ostream& os, const std::vector<ReplicaSummary>& rows, int d);

}  // namespace wl
