#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wl/frequencies.hpp"
#include "wl/rational.hpp"
#include "wl/trace.hpp"
#include "wl/update.hpp"

namespace wl::analysis {

// Cumulative visit frequencies nu_t(i)/t at the trace's recorded times.
// Frequencies are computed over the recorded samples, so they are the exact
// running proportions for stride-1 traces and a subsampled estimate otherwise.
struct FrequencyTrace {
    int d = 0;
    std::vector<long long> times;
    std::vector<double> freq;  // row-major, d per time

    double at(std::size_t row, int bin) const {  // 1-based bin
        return freq[row * static_cast<std::size_t>(d) + static_cast<std::size_t>(bin - 1)];
    }
};

FrequencyTrace frequency_trace(const RunTrace& trace);

// Predicted long-run proportion of visits to each bin for d = 2 at fixed
// gamma, from the update rule's increments:
//   limit = [f(1,phi2,g) - f(0,phi1,g)] / [f(1,phi1,g) - f(0,phi1,g) + f(1,phi2,g) - f(0,phi2,g)]
// The Linear rule gives back phi exactly; LogForm is biased except at phi = 1/2.
struct LimitPrediction {
    double bin1;
    double bin2;
};

LimitPrediction predict_limit(UpdateRule rule, double phi1, double gamma);
LimitPrediction predict_limit(UpdateRule rule, const DesiredFrequencies& phi, double gamma);

// Exact evaluation of the same expression for the Linear rule.  Returns
// (phi1, 1 - phi1) as rationals; the equality is an arithmetic identity.
std::pair<Rational, Rational> predict_limit_exact(const Rational& phi1, const Rational& gamma);

// Z^{(i,j)} time series reconstructed from the trace's stored columns.
std::vector<double> z_trajectory(const RunTrace& trace, int i, int j);

// Exact whole-run and last-half frequencies (from the trace's summary counts).
std::vector<double> final_frequencies(const RunTrace& trace);
std::vector<double> last_half_frequencies(const RunTrace& trace);

// Per-kappa waiting-time statistics for the FH events of a replica set.
struct HittingRow {
    long long kappa = 0;
    int n_replicas = 0;   // replicas that reached this kappa
    double mean = 0.0;
    double median = 0.0;
    long long max = 0;
};

struct HittingStats {
    std::vector<HittingRow> rows;
    std::vector<int> zero_fh_replicas;  // indices of replicas with no FH event
};

HittingStats fh_hitting_stats(const std::vector<RunTrace>& traces);

// CSV: kappa,n_replicas,mean,median,max
void write_hitting_stats_csv(std::ostream& os, const HittingStats& stats);
void write_hitting_stats_csv(const std::string& path, const HittingStats& stats);

}  // namespace wl::analysis
