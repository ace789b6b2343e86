#pragma once

#include <string_view>
#include <vector>

#include "wl/frequencies.hpp"
#include "wl/penalty.hpp"
#include "wl/rational.hpp"

namespace wl {

// The two penalty update rules.  Both add f(1_{X_i}(X_t), phi_i, gamma) to
// log theta(i):
//   Linear:   f(u, phi, gamma) = gamma * (u - phi)
//   LogForm:  f(u, phi, gamma) = log(1 + gamma * (u - phi))
// LogForm is the first-order-equivalent variant used by some practitioners;
// its long-run visit frequencies are biased away from phi (see analysis).
enum class UpdateRule { Linear, LogForm };

const char* to_string(UpdateRule rule);
UpdateRule update_rule_from_string(std::string_view name);

// f(indicator, phi_i, gamma) for the given rule.
double update_term(UpdateRule rule, int indicator, double phi_i, double gamma);

// Exact version of the Linear rule's f, for rational-arithmetic identities.
Rational update_term_exact(int indicator, const Rational& phi_i, const Rational& gamma);

// LogForm needs gamma*phi_i < 1 and gamma*(1-phi_i) < 1 so every log argument
// (including the d=2 increment denominators) stays positive.
void check_logform_gamma(const DesiredFrequencies& phi, double gamma);

void apply_update_in_place(UpdateRule rule, std::vector<double>& log_theta, int bin,
                           const DesiredFrequencies& phi, double gamma);

PenaltyState apply_update(UpdateRule rule, const PenaltyState& p, int bin,
                          const DesiredFrequencies& phi, double gamma);

// d = 2: the penalty ratio Z = log theta_1 - log theta_2 moves by +a when
// bin 1 is visited and by -b otherwise.
struct ZIncrements {
    double a;
    double b;
};

ZIncrements z_increments(UpdateRule rule, double phi1, double gamma);

}  // namespace wl
