#pragma once

#include <vector>

#include "wl/frequencies.hpp"

namespace wl {

// gamma_t = t^-alpha with alpha in (0.5, 1), the classical step-size range
// (sum gamma = inf, sum gamma^2 < inf).  Throws outside that range.
double deterministic_gamma(long long t, double alpha);

// Flat-histogram schedule constants.  gamma_kappa = gamma0 * gamma_decay^kappa,
// c_kappa = c0 * c_decay^kappa.  decay = 1 pins the value (kappa still counts).
struct FhParams {
    double gamma0 = 1.0;
    double gamma_decay = 0.5;
    double c0 = 0.05;
    double c_decay = 1.0;
};

void validate(const FhParams& params);

// Counters for the flat-histogram criterion: visit counts nu since the last
// reset, the running kappa, and the current gamma/c.
struct ScheduleState {
    double gamma = 1.0;
    long long kappa = 0;
    std::vector<long long> nu;
    long long t_since_reset = 0;
    double c = 0.05;

    static ScheduleState init(const FhParams& params, int d);
};

// Record a visit: nu[bin]++ and the since-reset clock advances.
void fh_observe(ScheduleState& s, int bin);

// The criterion: max_i |nu_i / t_since_reset - phi_i| < c.
// Requires t_since_reset >= 1.
bool fh_met(const ScheduleState& s, const DesiredFrequencies& phi);

// kappa++, counters reset, gamma and c move to their kappa-th values.
void fh_fire(ScheduleState& s, const FhParams& params);

double fh_gamma(const FhParams& params, long long kappa);
double fh_threshold(const FhParams& params, long long kappa);

}  // namespace wl
