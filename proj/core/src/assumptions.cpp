#include "wl/assumptions.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace wl {

bool AssumptionReport::all_ok() const {
    if (!(q_min > 0.0)) return false;
    if (!(ratio_min > 0.0) || !std::isfinite(ratio_max)) return false;
    if (!support_compact) return false;
    for (const double w : bin_widths)
        if (!(w > 0.0)) return false;
    for (const bool p : bin_pi_positive)
        if (!p) return false;
    return true;
}

AssumptionReport check_assumptions(const PartitionedTarget& target,
                                   const ProposalKernel& proposal, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("check_assumptions: grid_size must be >= 2");

    AssumptionReport report;
    report.grid_size = grid_size;
    report.support_compact = std::isfinite(target.lo()) && std::isfinite(target.hi());
    report.flags.push_back("bounds are grid extrema (approximations)");

    const int n = grid_size;
    std::vector<double> xs(static_cast<std::size_t>(n));
    std::vector<double> lp(static_cast<std::size_t>(n));
    int n_finite = 0;
    for (int k = 0; k < n; ++k) {
        xs[static_cast<std::size_t>(k)] =
            target.lo() + (target.hi() - target.lo()) * static_cast<double>(k) /
                              static_cast<double>(n - 1);
        lp[static_cast<std::size_t>(k)] = target.log_density(xs[static_cast<std::size_t>(k)]);
        if (std::isfinite(lp[static_cast<std::size_t>(k)])) ++n_finite;
    }
    if (n_finite == 0)
        throw std::runtime_error("check_assumptions: log-density not finite anywhere on the grid");

    double q_min = std::numeric_limits<double>::infinity();
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double lq_xy = proposal.log_q(xs[static_cast<std::size_t>(i)],
                                                xs[static_cast<std::size_t>(j)]);
            q_min = std::min(q_min, std::exp(lq_xy));
            if (!std::isfinite(lp[static_cast<std::size_t>(i)]) ||
                !std::isfinite(lp[static_cast<std::size_t>(j)]))
                continue;
            const double lq_yx = proposal.log_q(xs[static_cast<std::size_t>(j)],
                                                xs[static_cast<std::size_t>(i)]);
            const double ratio = std::exp(lp[static_cast<std::size_t>(j)] -
                                          lp[static_cast<std::size_t>(i)] + lq_yx - lq_xy);
            ratio_min = std::min(ratio_min, ratio);
            ratio_max = std::max(ratio_max, ratio);
        }
    }
    report.q_min = q_min;
    report.ratio_min = ratio_min;
    report.ratio_max = ratio_max;

    const auto& edges = target.edges();
    for (int b = 1; b <= target.num_bins(); ++b) {
        const double lo = edges[static_cast<std::size_t>(b - 1)];
        const double hi = edges[static_cast<std::size_t>(b)];
        report.bin_widths.push_back(hi - lo);
        // per-bin refinement: 64 interior points
        bool positive = false;
        for (int k = 0; k < 64 && !positive; ++k) {
            const double x = lo + (hi - lo) * (static_cast<double>(k) + 0.5) / 64.0;
            positive = std::isfinite(target.log_density(x));
        }
        report.bin_pi_positive.push_back(positive);
        if (!positive)
            report.flags.push_back("bin " + std::to_string(b) +
                                   " has no detectable pi mass (non-empty-bin assumption)");
    }
    return report;
}

void print_report(std::ostream& os, const AssumptionReport& report) {
    os << "assumption report (grid " << report.grid_size << "x" << report.grid_size << ")\n"
       << "  q_min (proposal lower bound)        : " << report.q_min << "\n"
       << "  MH ratio bounds m, M                : " << report.ratio_min << ", "
       << report.ratio_max << "\n"
       << "  support compact                     : " << (report.support_compact ? "yes" : "no")
       << "\n";
    for (std::size_t b = 0; b < report.bin_widths.size(); ++b) {
        os << "  bin " << (b + 1) << ": width " << report.bin_widths[b] << ", pi mass "
           << (report.bin_pi_positive[b] ? "positive" : "NOT DETECTED") << "\n";
    }
    for (const auto& f : report.flags) os << "  note: " << f << "\n";
    os << "  overall: " << (report.all_ok() ? "ok" : "VIOLATIONS FLAGGED") << "\n";
}

}  // namespace wl
