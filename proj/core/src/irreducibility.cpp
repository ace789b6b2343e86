#include "wl/irreducibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "wl/chain.hpp"
#include "wl/penalty.hpp"
#include "wl/update.hpp"

namespace wl::theory {

namespace {

bool bin_has_pi_mass(const PartitionedTarget& target, int bin) {
    const double lo = target.edges()[static_cast<std::size_t>(bin - 1)];
    const double hi = target.edges()[static_cast<std::size_t>(bin)];
    for (int k = 0; k < 64; ++k) {
        const double x = lo + (hi - lo) * (static_cast<double>(k) + 0.5) / 64.0;
        if (std::isfinite(target.log_density(x))) return true;
    }
    return false;
}

}  // namespace

IrreducibilityReport irreducibility_smoke_test(const PartitionedTarget& target,
                                               const ProposalKernel& proposal,
                                               const RationalFrequencies& phi, double gamma,
                                               long long trials, std::uint64_t seed,
                                               std::vector<std::vector<long long>> cases) {
    if (trials < 1) throw std::invalid_argument("irreducibility_smoke_test: trials must be >= 1");
    const int d = target.num_bins();
    if (phi.size() != d)
        throw std::invalid_argument("irreducibility_smoke_test: phi size must match bin count");

    const double x0 = 0.5 * (target.lo() + target.hi());
    const int start_bin = bin_of(target, x0);

    if (cases.empty()) {
        // the lazy path (stay in the starting bin) plus a few random small vectors
        std::vector<long long> lazy(static_cast<std::size_t>(d), 0);
        lazy[static_cast<std::size_t>(start_bin - 1)] = 3;
        cases.push_back(lazy);
        Rng gen(splitmix64(seed));
        for (int c = 0; c < 4; ++c) {
            std::vector<long long> n(static_cast<std::size_t>(d), 0);
            long long total = 0;
            for (int i = 0; i < d; ++i) {
                n[static_cast<std::size_t>(i)] =
                    static_cast<long long>(std::uniform_int_distribution<int>(0, 3)(gen));
                total += n[static_cast<std::size_t>(i)];
            }
            if (total == 0) n[static_cast<std::size_t>(start_bin - 1)] = 1;
            cases.push_back(std::move(n));
        }
    }

    const DesiredFrequencies phi_d(phi.to_doubles());
    IrreducibilityReport report;
    std::vector<bool> warned(static_cast<std::size_t>(d), false);

    for (std::size_t c = 0; c < cases.size(); ++c) {
        const std::vector<long long>& n = cases[c];
        if (static_cast<int>(n.size()) != d)
            throw std::invalid_argument("irreducibility_smoke_test: case size must match bin count");
        for (int i = 0; i < d; ++i) {
            if (n[static_cast<std::size_t>(i)] > 0 && !bin_has_pi_mass(target, i + 1) &&
                !warned[static_cast<std::size_t>(i)]) {
                report.warnings.push_back("bin " + std::to_string(i + 1) +
                                          " carries no pi mass; counts through it are unreachable "
                                          "(non-empty-bin assumption violated)");
                warned[static_cast<std::size_t>(i)] = true;
            }
        }
        const long long s_n = std::accumulate(n.begin(), n.end(), 0LL);

        IrreducibilityCase result;
        result.target_counts = n;
        result.trials = trials;
        for (long long trial = 0; trial < trials; ++trial) {
            Rng rng(splitmix64(seed + 0x9e37ULL * (c + 1) + static_cast<std::uint64_t>(trial)));
            PenaltyState p = PenaltyState::uniform(d);
            ChainState s = make_chain_state(target, x0);
            std::vector<long long> visits(static_cast<std::size_t>(d), 0);
            bool feasible = true;
            for (long long step = 0; step < s_n; ++step) {
                s = mh_step(target, proposal, p, s, rng);
                visits[static_cast<std::size_t>(s.bin - 1)] += 1;
                if (visits[static_cast<std::size_t>(s.bin - 1)] >
                    n[static_cast<std::size_t>(s.bin - 1)]) {
                    feasible = false;  // already overshot this bin
                    break;
                }
                apply_update_in_place(UpdateRule::Linear, p.values(), s.bin, phi_d, gamma);
            }
            if (feasible && visits == n) result.realized += 1;
        }
        report.cases.push_back(std::move(result));
    }
    return report;
}

void write_irreducibility_csv(std::ostream& os, const IrreducibilityReport& report) {
    os << "case,counts,trials,realized,fraction\n";
    for (std::size_t c = 0; c < report.cases.size(); ++c) {
        const IrreducibilityCase& cs = report.cases[c];
        os << c << ",\"(";
        for (std::size_t i = 0; i < cs.target_counts.size(); ++i) {
            if (i) os << ' ';
            os << cs.target_counts[i];
        }
        os << ")\"," << cs.trials << ',' << cs.realized << ',' << cs.fraction() << "\n";
    }
}

}  // namespace wl::theory
