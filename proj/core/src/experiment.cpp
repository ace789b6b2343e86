#include "wl/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "wl/analysis.hpp"
#include "wl/driver.hpp"
#include "wl/svg.hpp"

namespace wl {

namespace {

std::string replica_name(int r, const char* suffix) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "replica_%03d_%s", r, suffix);
    return buf;
}

}  // namespace

void write_summary_csv(std::ostream& os, const std::vector<ReplicaSummary>& rows, int d) {
    os << "replica,seed,steps,kappa,fh_events";
    for (int i = 1; i <= d; ++i) os << ",freq_" << i;
    for (int i = 1; i <= d; ++i) os << ",last_half_freq_" << i;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) os << ",final_z_" << i << "_" << j;
    os << "\n";
    char buf[32];
    const auto num = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    for (const ReplicaSummary& row : rows) {
        os << row.replica << ',' << row.seed << ',' << row.steps << ',' << row.kappa << ','
           << row.fh_events;
        for (const double f : row.final_freq) os << ',' << num(f);
        for (const double f : row.last_half_freq) os << ',' << num(f);
        for (const double z : row.final_z) os << ',' << num(z);
        os << "\n";
    }
}

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned workers) {
    validate_config(config);
    const PartitionedTarget target = build_target(config);
    const ProposalKernel proposal = build_proposal(config);
    const DesiredFrequencies phi = build_frequencies(config);
    const int d = target.num_bins();

    RunOptions opts;
    opts.stride = config.stride;
    opts.x0 = config.x0;

    const auto run_one = [&](std::uint64_t seed) {
        if (config.schedule.kind == ScheduleKind::Deterministic)
            return run_wl_deterministic(target, proposal, config.rule, phi, config.schedule.alpha,
                                        config.steps, seed, opts);
        return run_wl_fh(target, proposal, config.rule, phi, config.schedule.fh, config.steps,
                         seed, opts);
    };

    const std::vector<RunTrace> traces =
        run_replicas(config.replicas, config.seed, workers, run_one);

    const std::string out_dir = resolve_out_dir(config);
    std::filesystem::create_directories(out_dir);
    ExperimentResult result;

    std::vector<ReplicaSummary> rows;
    for (int r = 0; r < config.replicas; ++r) {
        const RunTrace& trace = traces[static_cast<std::size_t>(r)];

        const std::string trace_path = out_dir + "/" + replica_name(r, "trace.csv");
        write_trace_csv(trace_path, trace);
        result.artifacts.push_back(trace_path);

        const std::string fh_path = out_dir + "/" + replica_name(r, "fh.csv");
        write_fh_events_csv(fh_path, trace);
        result.artifacts.push_back(fh_path);

        const std::string svg_path = out_dir + "/" + replica_name(r, "freq.svg");
        analysis::write_frequency_svg(svg_path, analysis::frequency_trace(trace), phi.values(),
                                      "running visit frequencies, replica " + std::to_string(r));
        result.artifacts.push_back(svg_path);

        ReplicaSummary row;
        row.replica = r;
        row.seed = replica_seed(config.seed, static_cast<std::uint64_t>(r));
        row.steps = trace.total_steps;
        row.kappa = trace.fh_events.empty() ? 0 : trace.fh_events.back().kappa;
        row.fh_events = static_cast<long long>(trace.fh_events.size());
        row.final_freq = analysis::final_frequencies(trace);
        row.last_half_freq = analysis::last_half_frequencies(trace);
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                row.final_z.push_back(trace.final_log_theta[static_cast<std::size_t>(i - 1)] -
                                      trace.final_log_theta[static_cast<std::size_t>(j - 1)]);
        rows.push_back(std::move(row));
    }

    const analysis::HittingStats stats = analysis::fh_hitting_stats(traces);
    const std::string stats_path = out_dir + "/fh_waiting_times.csv";
    analysis::write_hitting_stats_csv(stats_path, stats);
    result.artifacts.push_back(stats_path);

    const std::string summary_path = out_dir + "/summary.csv";
    {
        std::ofstream os(summary_path);
        if (!os) throw std::runtime_error("cannot open '" + summary_path + "' for writing");
        write_summary_csv(os, rows, d);
    }
    result.artifacts.push_back(summary_path);

    result.replicas = std::move(rows);
    return result;
}

}  // namespace wl
