#include "wl/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "wl/chain.hpp"
#include "wl/penalty.hpp"

namespace wl::theory {

CouplingProbabilities coupling_probabilities(const TrueIncrementLaw& law, double epsilon,
                                             double eta) {
    if (!(law.p_down_given_up >= 0.0 && law.p_down_given_up <= 1.0) ||
        !(law.p_down_given_down >= 0.0 && law.p_down_given_down <= 1.0))
        throw std::invalid_argument("coupling: law probabilities must lie in [0,1]");
    if (!(epsilon >= 0.0 && epsilon <= 1.0) || !(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("coupling: epsilon, eta must lie in [0,1]");

    CouplingProbabilities probs{};
    probs.p1 = (1.0 - eta) / law.p_down_given_down;
    probs.p2 = epsilon / law.p_down_given_up;
    probs.p3 = epsilon * (1.0 + (1.0 - law.p_down_given_down) / law.p_down_given_down);
    if (!(probs.p1 <= 1.0) || !(probs.p2 <= 1.0) || !(probs.p3 <= 1.0))
        throw std::domain_error(
            "coupling domination: a case probability exceeds 1; the supplied law must satisfy "
            "P[-b|+a] > epsilon and P[-b|-b] > 1 - eta");
    return probs;
}

CoupledState coupled_pair_step(const CoupledState& prev, const TrueIncrementLaw& law,
                               const CouplingProbabilities& probs, Rng& rng) {
    if (prev.u == TwoState::Up && prev.u_tilde == TwoState::Down)
        throw std::logic_error("coupled_pair_step: state (U=+a, Utilde=-b) breaks domination");

    const double p_down =
        prev.u == TwoState::Up ? law.p_down_given_up : law.p_down_given_down;
    if (uniform01(rng) >= p_down) return CoupledState{TwoState::Up, TwoState::Up};

    // fresh U is a down move; the bounding move follows with the case probability
    double p;
    if (prev.u == TwoState::Down && prev.u_tilde == TwoState::Down)
        p = probs.p1;
    else if (prev.u == TwoState::Up)
        p = probs.p2;
    else
        p = probs.p3;
    const TwoState tilde = uniform01(rng) < p ? TwoState::Down : TwoState::Up;
    return CoupledState{TwoState::Down, tilde};
}

std::array<std::array<double, 2>, 2> CouplingReport::tilde_empirical() const {
    std::array<std::array<double, 2>, 2> out{};
    for (int from = 0; from < 2; ++from) {
        const double row = static_cast<double>(tilde_transitions[static_cast<std::size_t>(from)][0] +
                                               tilde_transitions[static_cast<std::size_t>(from)][1]);
        for (int to = 0; to < 2; ++to)
            out[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] =
                row > 0.0 ? static_cast<double>(
                                tilde_transitions[static_cast<std::size_t>(from)]
                                                 [static_cast<std::size_t>(to)]) /
                                row
                          : 0.0;
    }
    return out;
}

CouplingReport run_coupling(const TrueIncrementLaw& law, double epsilon, double eta,
                            long long steps, std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("run_coupling: steps must be >= 1");
    const CouplingProbabilities probs = coupling_probabilities(law, epsilon, eta);

    CouplingReport report;
    report.steps = steps;
    Rng rng(seed);
    CoupledState state{TwoState::Up, TwoState::Up};  // the coupling starts at a crossing
    for (long long k = 0; k < steps; ++k) {
        const CoupledState next = coupled_pair_step(state, law, probs, rng);
        const int from = state.u_tilde == TwoState::Up ? 0 : 1;
        const int to = next.u_tilde == TwoState::Up ? 0 : 1;
        report.tilde_transitions[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] += 1;
        if (next.u == TwoState::Up && next.u_tilde == TwoState::Down)
            report.domination_violations += 1;
        state = next;
    }
    return report;
}

TrueIncrementLaw estimate_true_law(const PartitionedTarget& target,
                                   const ProposalKernel& proposal, double z, long long steps,
                                   std::uint64_t seed) {
    if (target.num_bins() != 2)
        throw std::invalid_argument("estimate_true_law: needs a two-bin target");
    if (steps < 1000) throw std::invalid_argument("estimate_true_law: needs >= 1000 steps");

    const PenaltyState p(std::vector<double>{z, 0.0});  // Z = log theta_1 - log theta_2 pinned
    Rng rng(seed);
    ChainState s = make_chain_state(target, 0.5 * (target.lo() + target.hi()));
    for (int warm = 0; warm < 1000; ++warm) s = mh_step(target, proposal, p, s, rng);

    long long from1 = 0, from1_down = 0, from2 = 0, from2_down = 0;
    for (long long k = 0; k < steps; ++k) {
        const int prev_bin = s.bin;
        s = mh_step(target, proposal, p, s, rng);
        if (prev_bin == 1) {
            ++from1;
            if (s.bin == 2) ++from1_down;
        } else {
            ++from2;
            if (s.bin == 2) ++from2_down;
        }
    }
    if (from1 == 0 || from2 == 0)
        throw std::runtime_error("estimate_true_law: a bin was never visited; increase steps");
    return TrueIncrementLaw{static_cast<double>(from1_down) / static_cast<double>(from1),
                            static_cast<double>(from2_down) / static_cast<double>(from2)};
}

double estimate_threshold(const PartitionedTarget& target, const ProposalKernel& proposal,
                          double epsilon, double eta, long long steps_per_probe,
                          std::uint64_t seed) {
    for (int z = 1; z <= 32; ++z) {
        const TrueIncrementLaw law = estimate_true_law(
            target, proposal, static_cast<double>(z), steps_per_probe,
            splitmix64(seed + static_cast<std::uint64_t>(z)));
        if (law.p_down_given_up > epsilon && law.p_down_given_down > 1.0 - eta)
            return static_cast<double>(z);
    }
    throw std::runtime_error(
        "estimate_threshold: no z <= 32 satisfies the bounds for the requested epsilon/eta");
}

}  // namespace wl::theory
