#pragma once

#include <array>
#include <cstdint>

#include "wl/proposal.hpp"
#include "wl/rng.hpp"
#include "wl/target.hpp"
#include "wl/two_state.hpp"

namespace wl::theory {

// Conditional law of the true increment process: probabilities of a down
// move given the previous move, at penalty ratios beyond the threshold.
// Domination needs p_down_given_up > epsilon and p_down_given_down > 1 - eta.
struct TrueIncrementLaw {
    double p_down_given_up;    // P[U' = -b | U = +a]
    double p_down_given_down;  // P[U' = -b | U = -b]
};

struct CouplingProbabilities {
    double p1;  // keep Down when both processes were Down
    double p2;  // follow a fresh Up->Down when both were Up
    double p3;  // Down for the bounding chain when (U, Utilde) = (Down, Up)
};

// p1 = (1-eta)/P[-b|-b], p2 = eps/P[-b|+a], p3 = eps*(1 + P[+a|-b]/P[-b|-b]).
// Throws std::domain_error ("coupling domination") when any exceeds 1, i.e.
// when the supplied law violates the required bounds.
CouplingProbabilities coupling_probabilities(const TrueIncrementLaw& law, double epsilon,
                                             double eta);

struct CoupledState {
    TwoState u;
    TwoState u_tilde;
};

// One step of the coupled pair (U, Utilde).  If the fresh U is Up so is
// Utilde, which forces U <= Utilde pointwise; the three probabilities make
// the Utilde marginal exactly the two-state chain.
CoupledState coupled_pair_step(const CoupledState& prev, const TrueIncrementLaw& law,
                               const CouplingProbabilities& probs, Rng& rng);

struct CouplingReport {
    long long steps = 0;
    long long domination_violations = 0;
    std::array<std::array<long long, 2>, 2> tilde_transitions{};  // [from][to]

    std::array<std::array<double, 2>, 2> tilde_empirical() const;
};

CouplingReport run_coupling(const TrueIncrementLaw& law, double epsilon, double eta,
                            long long steps, std::uint64_t seed);

// Live-sampler adapter: empirical bin-transition law of the fixed-penalty
// chain with Z = log theta_1 - log theta_2 pinned at z.  A Monte Carlo
// estimate with no closed-form reference.
TrueIncrementLaw estimate_true_law(const PartitionedTarget& target,
                                   const ProposalKernel& proposal, double z, long long steps,
                                   std::uint64_t seed);

// Smallest z in {1, 2, ...} whose estimated law satisfies the domination
// bounds for (epsilon, eta); throws std::runtime_error if none does by z=32.
double estimate_threshold(const PartitionedTarget& target, const ProposalKernel& proposal,
                          double epsilon, double eta, long long steps_per_probe,
                          std::uint64_t seed);

}  // namespace wl::theory
