#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wl/frequencies.hpp"
#include "wl/proposal.hpp"
#include "wl/schedule.hpp"
#include "wl/target.hpp"
#include "wl/update.hpp"

namespace wl {

// Error with "file:line: field ..." context for CLI diagnostics.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TargetSpec {
    std::string kind = "truncated_normal";  // or "uniform"
    double mean = 0.0;
    double sd = 1.0;
};

struct ProposalSpec {
    std::string kind = "gaussian_walk";
    double sd = 1.0;
};

enum class ScheduleKind { Deterministic, FlatHistogram };

struct ScheduleSpec {
    ScheduleKind kind = ScheduleKind::FlatHistogram;
    double alpha = 0.6;  // deterministic schedule exponent
    FhParams fh;
};

// Everything needed to reproduce an experiment: target, proposal, bins,
// desired frequencies, update rule, schedule, run length, seeding and output.
struct ExperimentConfig {
    TargetSpec target;
    ProposalSpec proposal;
    std::vector<double> bin_edges;
    std::vector<double> phi;
    UpdateRule rule = UpdateRule::Linear;
    ScheduleSpec schedule;
    long long steps = 1;
    std::uint64_t seed = 1;
    int replicas = 1;
    long long stride = 1;
    std::optional<double> x0;
    std::string out_dir;  // empty: $WL_OUT_DIR or ./wl_out

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

bool operator==(const TargetSpec&, const TargetSpec&);
bool operator==(const ProposalSpec&, const ProposalSpec&);
bool operator==(const ScheduleSpec&, const ScheduleSpec&);
bool operator==(const FhParams&, const FhParams&);

// Flat key = value format in [section]s, '#' comments.  Parsing validates
// every field against the preconditions of the modules it feeds and throws
// ConfigError naming the file, line and field.
ExperimentConfig parse_config(std::istream& is, const std::string& name = "<config>");
ExperimentConfig parse_config_file(const std::string& path);

// Canonical serialization; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

void validate_config(const ExperimentConfig& config, const std::string& name = "<config>");

PartitionedTarget build_target(const ExperimentConfig& config);
ProposalKernel build_proposal(const ExperimentConfig& config);
DesiredFrequencies build_frequencies(const ExperimentConfig& config);

// Output directory resolution: config value, else $WL_OUT_DIR, else ./wl_out.
std::string resolve_out_dir(const ExperimentConfig& config);

}  // namespace wl
