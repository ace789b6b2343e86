// Experiment CLI: config-driven Wang-Landau runs, the d=2 limit calculator,
// assumption diagnostics and the two-state/lattice analysis tools.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wl/analysis.hpp"
#include "wl/assumptions.hpp"
#include "wl/config.hpp"
#include "wl/coupling.hpp"
#include "wl/experiment.hpp"
#include "wl/irreducibility.hpp"
#include "wl/lattice.hpp"
#include "wl/two_state.hpp"

namespace {

struct RunArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> replicas;
    std::optional<std::string> out;
    std::optional<long long> stride;
    unsigned workers = 0;
};

int cmd_run(const RunArgs& args) {
    wl::ExperimentConfig config = wl::parse_config_file(args.config_path);
    if (args.seed) config.seed = *args.seed;
    if (args.replicas) config.replicas = *args.replicas;
    if (args.out) config.out_dir = *args.out;
    if (args.stride) config.stride = *args.stride;
    wl::validate_config(config, args.config_path);

    const wl::ExperimentResult result = wl::run_experiment(config, args.workers);
    for (const auto& row : result.replicas) {
        std::printf("replica %d (seed %llu): kappa=%lld fh_events=%lld final_freq=(",
                    row.replica, static_cast<unsigned long long>(row.seed),
                    static_cast<long long>(row.kappa), static_cast<long long>(row.fh_events));
        for (std::size_t i = 0; i < row.final_freq.size(); ++i)
            std::printf(i ? ", %.6f" : "%.6f", row.final_freq[i]);
        std::printf(") last_half=(");
        for (std::size_t i = 0; i < row.last_half_freq.size(); ++i)
            std::printf(i ? ", %.6f" : "%.6f", row.last_half_freq[i]);
        std::printf(")\n");
    }
    std::printf("artifacts under %s (%zu files)\n", wl::resolve_out_dir(config).c_str(),
                result.artifacts.size());
    return 0;
}

int cmd_limit(const std::string& rule_name, double phi1, double gamma) {
    const wl::UpdateRule rule = wl::update_rule_from_string(rule_name);
    const wl::analysis::LimitPrediction limit = wl::analysis::predict_limit(rule, phi1, gamma);
    std::printf("%.6f %.6f\n", limit.bin1, limit.bin2);
    return 0;
}

int cmd_diagnose(const std::string& config_path, int grid) {
    const wl::ExperimentConfig config = wl::parse_config_file(config_path);
    const wl::PartitionedTarget target = wl::build_target(config);
    const wl::ProposalKernel proposal = wl::build_proposal(config);
    const wl::AssumptionReport report = wl::check_assumptions(target, proposal, grid);
    wl::print_report(std::cout, report);
    return report.all_ok() ? 0 : 3;
}

int cmd_theory_hitting(double eps, double eta, double a, double b, long long mc_replicas,
                       std::uint64_t seed, const std::string& out) {
    const wl::theory::TwoStateChain chain(eps, eta, a, b);
    const double analytic = wl::theory::expected_hitting_time(chain);
    const wl::theory::McEstimate mc = wl::theory::hitting_time_mc(chain, mc_replicas, seed);
    std::ostringstream csv;
    csv << "epsilon,eta,a,b,analytic,mc_mean,mc_se\n"
        << eps << ',' << eta << ',' << a << ',' << b << ',' << analytic << ',' << mc.mean << ','
        << mc.se << "\n";
    std::fputs(csv.str().c_str(), stdout);
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot open '" + out + "' for writing");
        os << csv.str();
    }
    std::printf("# |analytic - mc| = %.4g (%.2f standard errors)\n", std::abs(analytic - mc.mean),
                mc.se > 0 ? std::abs(analytic - mc.mean) / mc.se : 0.0);
    return 0;
}

int cmd_theory_bounding(double eps, double eta, double a, double b, long long steps,
                        std::uint64_t seed) {
    const wl::theory::TwoStateChain chain(eps, eta, a, b);
    const auto path = wl::theory::simulate_bounding_chain(chain, wl::theory::TwoState::Up, steps,
                                                          seed);
    long long ups = 0;
    double sum = 0.0;
    for (const auto s : path) {
        if (s == wl::theory::TwoState::Up) ++ups;
        sum += chain.value(s);
    }
    const auto pi = chain.stationary();
    std::printf("state frequencies: up %.6f down %.6f (stationary %.6f %.6f)\n",
                static_cast<double>(ups) / static_cast<double>(steps),
                1.0 - static_cast<double>(ups) / static_cast<double>(steps), pi[0], pi[1]);
    std::printf("mean increment: %.6f (stationary drift %.6f)\n",
                sum / static_cast<double>(steps), chain.stationary_drift());
    return 0;
}

int cmd_theory_coupling(double eps, double eta, double p_dd, double p_du, long long steps,
                        std::uint64_t seed) {
    const wl::theory::TrueIncrementLaw law{p_du, p_dd};
    const wl::theory::CouplingProbabilities probs =
        wl::theory::coupling_probabilities(law, eps, eta);
    std::printf("case probabilities: p1=%.6f p2=%.6f p3=%.6f\n", probs.p1, probs.p2, probs.p3);
    const wl::theory::CouplingReport report = wl::theory::run_coupling(law, eps, eta, steps, seed);
    const auto emp = report.tilde_empirical();
    std::printf("domination violations: %lld / %lld steps\n",
                static_cast<long long>(report.domination_violations),
                static_cast<long long>(report.steps));
    std::printf("bounding-chain transitions (empirical vs target):\n");
    std::printf("  up:   %.6f %.6f   vs   %.6f %.6f\n", emp[0][0], emp[0][1], 1 - eps, eps);
    std::printf("  down: %.6f %.6f   vs   %.6f %.6f\n", emp[1][0], emp[1][1], eta, 1 - eta);
    return report.domination_violations == 0 ? 0 : 3;
}

std::vector<wl::Rational> parse_phi_list(const std::string& text) {
    std::vector<wl::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(wl::parse_rational(item));
    return out;
}

std::vector<long long> parse_count_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::string format_counts(const std::vector<long long>& counts) {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(counts[i]);
    }
    return s + ")";
}

int cmd_theory_lattice(const std::string& phi_text, const std::string& from_text,
                       const std::string& to_text) {
    const wl::theory::RationalFrequencies phi(parse_phi_list(phi_text));
    const wl::theory::LatticePoint zero = wl::theory::zero_return_path(phi);
    std::printf("n = %s\n", format_counts(zero.counts).c_str());

    if (!from_text.empty() || !to_text.empty()) {
        const std::vector<long long> zeros(static_cast<std::size_t>(phi.size()), 0);
        const wl::theory::LatticePoint from(
            phi, from_text.empty() ? zeros : parse_count_list(from_text));
        const wl::theory::LatticePoint to(phi,
                                          to_text.empty() ? zeros : parse_count_list(to_text));
        const std::vector<long long> k = wl::theory::lattice_path(phi, from, to);
        std::printf("k = %s (verified exactly)\n", format_counts(k).c_str());
    }
    return 0;
}

int cmd_theory_irreducibility(const std::string& config_path, const std::string& phi_text,
                              double gamma, long long trials, std::uint64_t seed) {
    wl::ExperimentConfig config;
    if (!config_path.empty()) {
        config = wl::parse_config_file(config_path);
    } else {
        config.bin_edges = {-10.0, 0.0, 10.0};
        config.phi = {0.75, 0.25};
    }
    const wl::PartitionedTarget target = wl::build_target(config);
    const wl::ProposalKernel proposal = wl::build_proposal(config);
    const wl::theory::RationalFrequencies phi(parse_phi_list(phi_text));
    const wl::theory::IrreducibilityReport report =
        wl::theory::irreducibility_smoke_test(target, proposal, phi, gamma, trials, seed);
    wl::theory::write_irreducibility_csv(std::cout, report);
    for (const auto& w : report.warnings) std::printf("# warning: %s\n", w.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wang-Landau sampling lab: adaptive-MCMC drivers and analysis tools"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "run a configured experiment");
    run->add_option("--config", run_args.config_path, "experiment config file")->required();
    run->add_option("--seed", run_args.seed, "master seed override");
    run->add_option("--replicas", run_args.replicas, "replica count override");
    run->add_option("--out", run_args.out, "output directory override");
    run->add_option("--stride", run_args.stride, "trace thinning stride override");
    run->add_option("--workers", run_args.workers, "worker threads (0 = hardware)");

    std::string limit_rule = "linear";
    double limit_phi1 = 0.75, limit_gamma = 1.0;
    auto* limit = app.add_subcommand("limit", "predicted d=2 long-run visit frequencies");
    limit->add_option("--rule", limit_rule, "linear|logform")->required();
    limit->add_option("--phi1", limit_phi1, "desired frequency of bin 1")->required();
    limit->add_option("--gamma", limit_gamma, "fixed schedule value")->required();

    std::string diag_config;
    int diag_grid = 128;
    auto* diagnose = app.add_subcommand("diagnose", "grid-scan the standing assumptions");
    diagnose->add_option("--config", diag_config, "experiment config file")->required();
    diagnose->add_option("--grid", diag_grid, "grid points per axis");

    auto* theory = app.add_subcommand("theory", "bounding-chain and lattice tools");
    theory->require_subcommand(1);

    double th_eps = 0.3, th_eta = 0.1, th_a = 1.0, th_b = 1.0;
    long long th_mc = 100000;
    std::uint64_t th_seed = 1;
    std::string th_out;
    auto* hitting = theory->add_subcommand("hitting", "expected return time: analytic vs MC");
    hitting->add_option("--eps", th_eps)->required();
    hitting->add_option("--eta", th_eta)->required();
    hitting->add_option("--a", th_a)->required();
    hitting->add_option("--b", th_b)->required();
    hitting->add_option("--mc-replicas", th_mc);
    hitting->add_option("--seed", th_seed);
    hitting->add_option("--out", th_out, "also write the CSV here");

    double bd_eps = 0.2, bd_eta = 0.1, bd_a = 1.0, bd_b = 1.0;
    long long bd_steps = 100000;
    std::uint64_t bd_seed = 1;
    auto* bounding = theory->add_subcommand("bounding", "simulate the two-state bounding chain");
    bounding->add_option("--eps", bd_eps)->required();
    bounding->add_option("--eta", bd_eta)->required();
    bounding->add_option("--a", bd_a);
    bounding->add_option("--b", bd_b);
    bounding->add_option("--steps", bd_steps);
    bounding->add_option("--seed", bd_seed);

    double cp_eps = 0.3, cp_eta = 0.1, cp_pdd = 0.95, cp_pdu = 0.4;
    long long cp_steps = 100000;
    std::uint64_t cp_seed = 1;
    auto* coupling = theory->add_subcommand("coupling", "coupled true/bounding increments");
    coupling->add_option("--eps", cp_eps)->required();
    coupling->add_option("--eta", cp_eta)->required();
    coupling->add_option("--p-down-down", cp_pdd, "P[-b | previous -b] of the true law")->required();
    coupling->add_option("--p-down-up", cp_pdu, "P[-b | previous +a] of the true law")->required();
    coupling->add_option("--steps", cp_steps);
    coupling->add_option("--seed", cp_seed);

    std::string lat_phi = "3/4,1/4", lat_from, lat_to;
    auto* lattice = theory->add_subcommand("lattice", "rational zero-return and point-to-point paths");
    lattice->add_option("--phi", lat_phi, "rational frequencies, e.g. 3/4,1/4")->required();
    lattice->add_option("--from", lat_from, "defining counts of the start point");
    lattice->add_option("--to", lat_to, "defining counts of the end point");

    std::string irr_config, irr_phi = "3/4,1/4";
    double irr_gamma = 1.0;
    long long irr_trials = 100000;
    std::uint64_t irr_seed = 1;
    auto* irreducibility =
        theory->add_subcommand("irreducibility", "exact visit-count realizability check");
    irreducibility->add_option("--config", irr_config, "target/proposal config (default: toy)");
    irreducibility->add_option("--phi", irr_phi, "rational frequencies");
    irreducibility->add_option("--gamma", irr_gamma, "fixed schedule value");
    irreducibility->add_option("--trials", irr_trials);
    irreducibility->add_option("--seed", irr_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(run_args);
        if (*limit) return cmd_limit(limit_rule, limit_phi1, limit_gamma);
        if (*diagnose) return cmd_diagnose(diag_config, diag_grid);
        if (*hitting) return cmd_theory_hitting(th_eps, th_eta, th_a, th_b, th_mc, th_seed, th_out);
        if (*bounding) return cmd_theory_bounding(bd_eps, bd_eta, bd_a, bd_b, bd_steps, bd_seed);
        if (*coupling) return cmd_theory_coupling(cp_eps, cp_eta, cp_pdd, cp_pdu, cp_steps, cp_seed);
        if (*lattice) return cmd_theory_lattice(lat_phi, lat_from, lat_to);
        if (*irreducibility)
            return cmd_theory_irreducibility(irr_config, irr_phi, irr_gamma, irr_trials, irr_seed);
    } catch (const wl::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
