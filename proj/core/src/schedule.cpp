#include "wl/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace wl {

double deterministic_gamma(long long t, double alpha) {
    if (t < 1) throw std::invalid_argument("deterministic_gamma: t must be >= 1");
    if (!(alpha > 0.5 && alpha < 1.0))
        throw std::invalid_argument(
            "deterministic_gamma: alpha must lie in (0.5, 1) so that sum gamma_t diverges "
            "while sum gamma_t^2 converges");
    return std::pow(static_cast<double>(t), -alpha);
}

void validate(const FhParams& params) {
    if (!(params.gamma0 > 0.0)) throw std::invalid_argument("fh: gamma0 must be positive");
    if (!(params.gamma_decay > 0.0 && params.gamma_decay <= 1.0))
        throw std::invalid_argument("fh: gamma_decay must lie in (0, 1]");
    if (!(params.c0 > 0.0)) throw std::invalid_argument("fh: c must be positive");
    if (!(params.c_decay > 0.0 && params.c_decay <= 1.0))
        throw std::invalid_argument("fh: c_decay must lie in (0, 1]");
}

ScheduleState ScheduleState::init(const FhParams& params, int d) {
    validate(params);
    ScheduleState s;
    s.gamma = params.gamma0;
    s.kappa = 0;
    s.nu.assign(static_cast<std::size_t>(d), 0);
    s.t_since_reset = 0;
    s.c = params.c0;
    return s;
}

void fh_observe(ScheduleState& s, int bin) {
    s.nu[static_cast<std::size_t>(bin - 1)] += 1;
    s.t_since_reset += 1;
}

bool fh_met(const ScheduleState& s, const DesiredFrequencies& phi) {
    if (s.t_since_reset < 1) throw std::logic_error("fh_met: no observations since reset");
    const double t = static_cast<double>(s.t_since_reset);
    double worst = 0.0;
    for (int i = 0; i < phi.size(); ++i) {
        const double dev = std::abs(static_cast<double>(s.nu[static_cast<std::size_t>(i)]) / t -
                                    phi.at(i));
        if (dev > worst) worst = dev;
    }
    return worst < s.c;
}

void fh_fire(ScheduleState& s, const FhParams& params) {
    s.kappa += 1;
    s.nu.assign(s.nu.size(), 0);
    s.t_since_reset = 0;
    s.gamma = fh_gamma(params, s.kappa);
    s.c = fh_threshold(params, s.kappa);
}

double fh_gamma(const FhParams& params, long long kappa) {
    return params.gamma0 * std::pow(params.gamma_decay, static_cast<double>(kappa));
}

double fh_threshold(const FhParams& params, long long kappa) {
    return params.c0 * std::pow(params.c_decay, static_cast<double>(kappa));
}

}  // namespace wl
