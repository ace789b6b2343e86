#pragma once

#include <functional>

#include "wl/rng.hpp"

namespace wl {

// Proposal kernel Q: a log-density log Q(x, y) and a sampler drawing y ~ Q(x, .).
// The two must describe the same kernel.
struct ProposalKernel {
    std::function<double(double, double)> log_q;
    std::function<double(double, Rng&)> sample;
};

// Gaussian random walk y = x + sd * N(0,1).  Symmetric: log_q(x,y) == log_q(y,x).
ProposalKernel gaussian_random_walk(double sd);

}  // namespace wl
