#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wl/proposal.hpp"
#include "wl/target.hpp"

namespace wl {

// Grid-scan diagnostic for the standing assumptions: non-empty bins (in
// Lebesgue and pi mass), compact support, proposal density bounded below,
// and the MH ratio pi(y)Q(y,x) / (pi(x)Q(x,y)) bounded on both sides.
// All bounds are grid minima/maxima, i.e. approximations.
struct AssumptionReport {
    int grid_size = 0;
    double q_min = 0.0;      // min Q(x,y) over the grid
    double ratio_min = 0.0;  // m estimate
    double ratio_max = 0.0;  // M estimate
    bool support_compact = true;
    std::vector<double> bin_widths;
    std::vector<bool> bin_pi_positive;
    std::vector<std::string> flags;

    bool all_ok() const;
};

// grid_size >= 2.  Throws std::runtime_error if the log-density is not
// finite anywhere on the grid.
AssumptionReport check_assumptions(const PartitionedTarget& target,
                                   const ProposalKernel& proposal, int grid_size);

void print_report(std::ostream& os, const AssumptionReport& report);

}  // namespace wl
