#include "wl/proposal.hpp"

#include <cmath>
#include <stdexcept>

namespace wl {

ProposalKernel gaussian_random_walk(double sd) {
    if (!(sd > 0.0)) throw std::invalid_argument("gaussian_random_walk: sd must be positive");
    const double log_norm = -0.5 * std::log(2.0 * M_PI) - std::log(sd);
    return ProposalKernel{
        [sd, log_norm](double x, double y) {
            const double u = (y - x) / sd;
            return log_norm - 0.5 * u * u;
        },
        // A fresh distribution per call: no hidden cached normal deviate, so
        // streams replay identically across runs.
        [sd](double x, Rng& rng) { return x + std::normal_distribution<double>(0.0, sd)(rng); }};
}

}  // namespace wl
