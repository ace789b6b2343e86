#include "wl/driver.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "wl/update.hpp"

namespace wl {

namespace {

enum class ScheduleMode { Deterministic, FlatHistogram };

RunTrace run_loop(const PartitionedTarget& target, const ProposalKernel& proposal,
                  UpdateRule rule, const DesiredFrequencies& phi, ScheduleMode mode, double alpha,
                  const FhParams& params, long long steps, std::uint64_t seed,
                  const RunOptions& opts) {
    if (steps < 1) throw std::invalid_argument("run: need at least 1 iteration");
    if (opts.stride < 1) throw std::invalid_argument("run: stride must be >= 1");
    const int d = target.num_bins();
    if (phi.size() != d) throw std::invalid_argument("run: phi size must match the bin count");
    if (rule == UpdateRule::LogForm) {
        // largest gamma the run will use
        check_logform_gamma(phi, mode == ScheduleMode::Deterministic ? deterministic_gamma(1, alpha)
                                                                     : params.gamma0);
    }

    Rng rng(seed);
    PenaltyState p = PenaltyState::uniform(d);
    const double x0 = opts.x0.value_or(0.5 * (target.lo() + target.hi()));
    ChainState s = make_chain_state(target, x0);

    ScheduleState sched = mode == ScheduleMode::FlatHistogram
                              ? ScheduleState::init(params, d)
                              : ScheduleState{0.0, 0, std::vector<long long>(), 0, 0.0};
    if (mode == ScheduleMode::FlatHistogram && params.c0 >= phi.min_margin()) {
        std::fprintf(stderr,
                     "warning: fh threshold c=%g >= min_i min(phi_i, 1-phi_i)=%g; the criterion "
                     "can fire after a single observation\n",
                     params.c0, phi.min_margin());
    }

    RunTrace trace;
    trace.d = d;
    trace.total_steps = steps;
    trace.stride = opts.stride;
    trace.counts.assign(static_cast<std::size_t>(d), 0);
    trace.counts_half.assign(static_cast<std::size_t>(d), 0);
    const long long n_records = (steps + opts.stride - 1) / opts.stride;
    const std::size_t pairs = static_cast<std::size_t>(trace.num_pairs());
    trace.t.reserve(static_cast<std::size_t>(n_records));
    trace.bin.reserve(static_cast<std::size_t>(n_records));
    trace.gamma.reserve(static_cast<std::size_t>(n_records));
    trace.kappa.reserve(static_cast<std::size_t>(n_records));
    trace.fh_event.reserve(static_cast<std::size_t>(n_records));
    trace.z.reserve(static_cast<std::size_t>(n_records) * pairs);

    const long long half = steps / 2;
    double gamma = 0.0;
    for (long long t = 1; t <= steps; ++t) {
        s = mh_step(target, proposal, p, s, rng);

        bool fired = false;
        if (mode == ScheduleMode::Deterministic) {
            gamma = deterministic_gamma(t, alpha);
        } else {
            fh_observe(sched, s.bin);
            if (fh_met(sched, phi)) {
                const double gamma_before = sched.gamma;
                fh_fire(sched, params);
                trace.fh_events.push_back(FhEvent{sched.kappa, t, gamma_before, sched.gamma});
                fired = true;
            }
            gamma = sched.gamma;
        }

        // gamma underflows to 0 after enough decays; the update is then a no-op
        if (gamma > 0.0) apply_update_in_place(rule, p.values(), s.bin, phi, gamma);

        trace.counts[static_cast<std::size_t>(s.bin - 1)] += 1;
        if (t <= half) trace.counts_half[static_cast<std::size_t>(s.bin - 1)] += 1;

        if ((t - 1) % opts.stride == 0) {
            trace.t.push_back(t);
            trace.bin.push_back(s.bin);
            trace.gamma.push_back(gamma);
            trace.kappa.push_back(sched.kappa);
            trace.fh_event.push_back(fired ? 1 : 0);
            for (int i = 1; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j) trace.z.push_back(p.z(i, j));
        }

        if (opts.recenter_every > 0 && t % opts.recenter_every == 0) p.recenter();
    }

    trace.final_log_theta = p.values();
    return trace;
}

}  // namespace

RunTrace run_wl_deterministic(const PartitionedTarget& target, const ProposalKernel& proposal,
                              UpdateRule rule, const DesiredFrequencies& phi, double alpha,
                              long long steps, std::uint64_t seed, const RunOptions& opts) {
    deterministic_gamma(1, alpha);  // validates alpha up front
    return run_loop(target, proposal, rule, phi, ScheduleMode::Deterministic, alpha, FhParams{},
                    steps, seed, opts);
}

RunTrace run_wl_fh(const PartitionedTarget& target, const ProposalKernel& proposal,
                   UpdateRule rule, const DesiredFrequencies& phi, const FhParams& params,
                   long long steps, std::uint64_t seed, const RunOptions& opts) {
    validate(params);
    return run_loop(target, proposal, rule, phi, ScheduleMode::FlatHistogram, 0.0, params, steps,
                    seed, opts);
}

std::vector<RunTrace> run_replicas(int n_replicas, std::uint64_t master_seed, unsigned workers,
                                   const std::function<RunTrace(std::uint64_t)>& run_one) {
    if (n_replicas < 1) throw std::invalid_argument("run_replicas: need at least 1 replica");
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n_replicas));

    std::vector<RunTrace> traces(static_cast<std::size_t>(n_replicas));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;

    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int r = next.fetch_add(1);
                if (r >= n_replicas) return;
                try {
                    traces[static_cast<std::size_t>(r)] =
                        run_one(replica_seed(master_seed, static_cast<std::uint64_t>(r)));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return traces;
}

}  // namespace wl
