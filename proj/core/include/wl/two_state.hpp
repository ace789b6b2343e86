#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace wl::theory {

// States of the bounding increment chain: Up carries the value +a, Down
// carries -b.
enum class TwoState { Up, Down };

// Markov chain over {+a, -b} with transition matrix
//   [[1-epsilon, epsilon], [eta, 1-eta]]
// (first row/state = Up).  Used to dominate the true penalty-ratio increments
// once the ratio leaves a bounded interval.
struct TwoStateChain {
    double epsilon;  // P(Up -> Down)
    double eta;      // P(Down -> Up)
    double a;        // value of Up state
    double b;        // magnitude of Down state (value is -b)

    TwoStateChain(double epsilon, double eta, double a, double b);

    std::array<std::array<double, 2>, 2> transition_matrix() const;

    // (eta, epsilon) / (epsilon + eta); requires epsilon + eta > 0.
    std::array<double, 2> stationary() const;

    // (a*eta - b*epsilon) / (epsilon + eta): mean increment at stationarity.
    double stationary_drift() const;

    double value(TwoState s) const { return s == TwoState::Up ? a : -b; }
};

std::vector<TwoState> simulate_bounding_chain(const TwoStateChain& chain, TwoState start,
                                              long long steps, std::uint64_t seed);

// E[T] with T = inf{ d >= 0 : sum_{k=1..d} U_k <= -a }, the chain started in
// state Up (U_1 is drawn from the transition out of Up).  Computed by
// first-step analysis on the (state, cumulative-sum) lattice; requires the
// negative-drift condition a*eta < b*epsilon and a commensurable ratio a/b
// (a/b rational within 1e-9, denominator <= 512) so levels are integers.
// The level cap grows until the answer is stable to rel_tol.
double expected_hitting_time(const TwoStateChain& chain, double rel_tol = 1e-6);

struct McEstimate {
    double mean = 0.0;
    double se = 0.0;
    long long n = 0;
};

// Monte Carlo estimate of the same expectation.
McEstimate hitting_time_mc(const TwoStateChain& chain, long long replicas, std::uint64_t seed,
                           unsigned workers = 0);

}  // namespace wl::theory
