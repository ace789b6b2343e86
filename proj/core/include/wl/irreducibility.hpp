#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wl/lattice.hpp"
#include "wl/proposal.hpp"
#include "wl/target.hpp"

namespace wl::theory {

// Empirical check that exact visit-count vectors are realizable: for a count
// vector n, a path of S_n = sum n_i steps of the fixed-gamma Linear-update
// chain realizes exactly n_i visits to each bin with positive probability.
struct IrreducibilityCase {
    std::vector<long long> target_counts;
    long long trials = 0;
    long long realized = 0;

    double fraction() const {
        return trials == 0 ? 0.0 : static_cast<double>(realized) / static_cast<double>(trials);
    }
};

struct IrreducibilityReport {
    std::vector<IrreducibilityCase> cases;
    std::vector<std::string> warnings;  // e.g. a requested bin carries no pi mass
};

// Runs `trials` independent short chains per case.  With an empty `cases`
// list, a default set is generated from the seed: the lazy vector (stay in
// the starting bin) plus a few random small vectors.  A zero realized
// fraction is a reported finding, not an error.
IrreducibilityReport irreducibility_smoke_test(const PartitionedTarget& target,
                                               const ProposalKernel& proposal,
                                               const RationalFrequencies& phi, double gamma,
                                               long long trials, std::uint64_t seed,
                                               std::vector<std::vector<long long>> cases = {});

// CSV: case,counts,trials,realized,fraction
void write_irreducibility_csv(std::ostream& os, const IrreducibilityReport& report);

}  // namespace wl::theory
