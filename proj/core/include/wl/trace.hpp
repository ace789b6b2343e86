#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wl/update.hpp"

namespace wl {

struct FhEvent {
    long long kappa;      // value after the increment
    long long t_global;   // iteration at which the criterion fired
    double gamma_before;
    double gamma_after;
};

// Per-run record.  The per-iteration columns are thinned by `stride`
// (records at t = 1, 1+stride, ...; count = ceil(T/stride)); the summary
// fields (counts, final penalties, FH events) are exact regardless of stride.
// Records hold the post-update state of iteration t.
struct RunTrace {
    int d = 0;
    long long total_steps = 0;
    long long stride = 1;

    // thinned per-iteration columns
    std::vector<long long> t;
    std::vector<int> bin;
    std::vector<double> gamma;
    std::vector<long long> kappa;
    std::vector<std::uint8_t> fh_event;
    std::vector<double> z;  // row-major, num_pairs() values per record, pairs (i<j)

    // exact run summaries
    std::vector<long long> counts;       // visits per bin over all T iterations
    std::vector<long long> counts_half;  // visits per bin over t <= T/2
    std::vector<double> final_log_theta;
    std::vector<FhEvent> fh_events;

    int num_pairs() const { return d * (d - 1) / 2; }
    std::size_t num_records() const { return t.size(); }
    double z_at(std::size_t record, int i, int j) const;  // Z^{(i,j)}, any i != j
};

// Flat index of the ordered pair (i, j), 1 <= i < j <= d.
int z_pair_index(int i, int j, int d);

// CSV with header: t,bin,gamma,kappa,fh_event,z_1_2,...  (one column per pair i<j).
void write_trace_csv(std::ostream& os, const RunTrace& trace);
void write_trace_csv(const std::string& path, const RunTrace& trace);

// Reads the CSV back.  Only the per-iteration columns are present in the
// file; visit counts are rebuilt from the bin column (exact when the trace
// was written with stride 1).
RunTrace read_trace_csv(std::istream& is, const std::string& name = "<trace>");
RunTrace read_trace_csv(const std::string& path);

// CSV with header: kappa,t_global,gamma_before,gamma_after.
void write_fh_events_csv(std::ostream& os, const RunTrace& trace);
void write_fh_events_csv(const std::string& path, const RunTrace& trace);

}  // namespace wl
