#include "wl/update.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wl {

const char* to_string(UpdateRule rule) {
    return rule == UpdateRule::Linear ? "linear" : "logform";
}

UpdateRule update_rule_from_string(std::string_view name) {
    if (name == "linear") return UpdateRule::Linear;
    if (name == "logform") return UpdateRule::LogForm;
    throw std::invalid_argument("unknown update rule '" + std::string(name) +
                                "' (expected 'linear' or 'logform')");
}

double update_term(UpdateRule rule, int indicator, double phi_i, double gamma) {
    const double step = gamma * (static_cast<double>(indicator) - phi_i);
    return rule == UpdateRule::Linear ? step : std::log1p(step);
}

Rational update_term_exact(int indicator, const Rational& phi_i, const Rational& gamma) {
    return gamma * (Rational(indicator) - phi_i);
}

void check_logform_gamma(const DesiredFrequencies& phi, double gamma) {
    for (const double p : phi.values()) {
        if (gamma * p >= 1.0 || gamma * (1.0 - p) >= 1.0)
            throw std::invalid_argument(
                "logform update: need gamma*phi_i < 1 and gamma*(1-phi_i) < 1 for every bin");
    }
}

void apply_update_in_place(UpdateRule rule, std::vector<double>& log_theta, int bin,
                           const DesiredFrequencies& phi, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("apply_update: gamma must be positive");
    if (static_cast<int>(log_theta.size()) != phi.size())
        throw std::invalid_argument("apply_update: phi/penalty dimension mismatch");
    if (bin < 1 || bin > phi.size()) throw std::domain_error("apply_update: bin out of range");
    if (rule == UpdateRule::LogForm) check_logform_gamma(phi, gamma);
    for (int i = 0; i < phi.size(); ++i) {
        log_theta[static_cast<std::size_t>(i)] +=
            update_term(rule, i + 1 == bin ? 1 : 0, phi.at(i), gamma);
    }
}

PenaltyState apply_update(UpdateRule rule, const PenaltyState& p, int bin,
                          const DesiredFrequencies& phi, double gamma) {
    std::vector<double> log_theta = p.values();
    apply_update_in_place(rule, log_theta, bin, phi, gamma);
    return PenaltyState(std::move(log_theta));
}

ZIncrements z_increments(UpdateRule rule, double phi1, double gamma) {
    if (!(phi1 > 0.0 && phi1 < 1.0))
        throw std::invalid_argument("z_increments: phi1 must lie in (0,1)");
    if (!(gamma > 0.0)) throw std::invalid_argument("z_increments: gamma must be positive");
    if (rule == UpdateRule::Linear)
        return {2.0 * gamma * (1.0 - phi1), 2.0 * gamma * phi1};
    if (gamma * phi1 >= 1.0 || gamma * (1.0 - phi1) >= 1.0)
        throw std::invalid_argument("z_increments: logform gamma bound violated");
    const double ga = gamma * (1.0 - phi1);
    const double gb = gamma * phi1;
    return {std::log1p(ga) - std::log1p(-ga), std::log1p(gb) - std::log1p(-gb)};
}

}  // namespace wl
