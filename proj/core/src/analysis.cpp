#include "wl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace wl::analysis {

FrequencyTrace frequency_trace(const RunTrace& trace) {
    if (trace.num_records() == 0) throw std::invalid_argument("frequency_trace: empty trace");
    FrequencyTrace out;
    out.d = trace.d;
    out.times = trace.t;
    out.freq.reserve(trace.num_records() * static_cast<std::size_t>(trace.d));
    std::vector<long long> counts(static_cast<std::size_t>(trace.d), 0);
    long long n = 0;
    for (std::size_t r = 0; r < trace.num_records(); ++r) {
        counts[static_cast<std::size_t>(trace.bin[r] - 1)] += 1;
        n += 1;
        for (int i = 0; i < trace.d; ++i)
            out.freq.push_back(static_cast<double>(counts[static_cast<std::size_t>(i)]) /
                               static_cast<double>(n));
    }
    return out;
}

namespace {

double limit_numerator(UpdateRule rule, double phi1, double phi2, double gamma) {
    return update_term(rule, 1, phi2, gamma) - update_term(rule, 0, phi1, gamma);
}

}  // namespace

LimitPrediction predict_limit(UpdateRule rule, double phi1, double gamma) {
    if (!(phi1 > 0.0 && phi1 < 1.0))
        throw std::invalid_argument("predict_limit: phi1 must lie in (0,1)");
    if (!(gamma > 0.0)) throw std::invalid_argument("predict_limit: gamma must be positive");
    const double phi2 = 1.0 - phi1;
    if (rule == UpdateRule::LogForm)
        check_logform_gamma(DesiredFrequencies({phi1, phi2}), gamma);
    const double num = limit_numerator(rule, phi1, phi2, gamma);
    const double den = update_term(rule, 1, phi1, gamma) - update_term(rule, 0, phi1, gamma) +
                       update_term(rule, 1, phi2, gamma) - update_term(rule, 0, phi2, gamma);
    const double l = num / den;
    return LimitPrediction{l, 1.0 - l};
}

LimitPrediction predict_limit(UpdateRule rule, const DesiredFrequencies& phi, double gamma) {
    if (phi.size() != 2)
        throw std::invalid_argument("predict_limit: the limit formula is derived for d = 2 only");
    return predict_limit(rule, phi.at(0), gamma);
}

std::pair<Rational, Rational> predict_limit_exact(const Rational& phi1, const Rational& gamma) {
    if (!(Rational(0) < phi1 && phi1 < Rational(1)))
        throw std::invalid_argument("predict_limit_exact: phi1 must lie in (0,1)");
    if (!(Rational(0) < gamma))
        throw std::invalid_argument("predict_limit_exact: gamma must be positive");
    const Rational phi2 = Rational(1) - phi1;
    const Rational num =
        update_term_exact(1, phi2, gamma) - update_term_exact(0, phi1, gamma);
    const Rational den = update_term_exact(1, phi1, gamma) - update_term_exact(0, phi1, gamma) +
                         update_term_exact(1, phi2, gamma) - update_term_exact(0, phi2, gamma);
    const Rational l = num / den;
    return {l, Rational(1) - l};
}

std::vector<double> z_trajectory(const RunTrace& trace, int i, int j) {
    if (i == j) throw std::domain_error("z_trajectory: need i != j");
    if (i < 1 || j < 1 || i > trace.d || j > trace.d)
        throw std::domain_error("z_trajectory: bin index out of range");
    if (trace.z.size() != trace.num_records() * static_cast<std::size_t>(trace.num_pairs()))
        throw std::runtime_error("z_trajectory: trace is missing z columns");
    std::vector<double> out;
    out.reserve(trace.num_records());
    for (std::size_t r = 0; r < trace.num_records(); ++r) out.push_back(trace.z_at(r, i, j));
    return out;
}

std::vector<double> final_frequencies(const RunTrace& trace) {
    if (trace.counts.empty() || trace.total_steps == 0)
        throw std::invalid_argument("final_frequencies: trace has no counts");
    std::vector<double> out;
    long long n = 0;
    for (const long long c : trace.counts) n += c;
    for (const long long c : trace.counts)
        out.push_back(static_cast<double>(c) / static_cast<double>(n));
    return out;
}

std::vector<double> last_half_frequencies(const RunTrace& trace) {
    if (trace.counts.empty() || trace.total_steps == 0)
        throw std::invalid_argument("last_half_frequencies: trace has no counts");
    std::vector<double> out;
    long long n = 0;
    for (std::size_t i = 0; i < trace.counts.size(); ++i)
        n += trace.counts[i] - trace.counts_half[i];
    for (std::size_t i = 0; i < trace.counts.size(); ++i)
        out.push_back(static_cast<double>(trace.counts[i] - trace.counts_half[i]) /
                      static_cast<double>(n));
    return out;
}

HittingStats fh_hitting_stats(const std::vector<RunTrace>& traces) {
    if (traces.empty()) throw std::invalid_argument("fh_hitting_stats: no traces");
    HittingStats stats;
    long long max_kappa = 0;
    for (std::size_t r = 0; r < traces.size(); ++r) {
        if (traces[r].fh_events.empty()) stats.zero_fh_replicas.push_back(static_cast<int>(r));
        if (!traces[r].fh_events.empty())
            max_kappa = std::max(max_kappa, traces[r].fh_events.back().kappa);
    }
    for (long long kappa = 1; kappa <= max_kappa; ++kappa) {
        std::vector<long long> waits;
        for (const RunTrace& trace : traces) {
            if (static_cast<long long>(trace.fh_events.size()) < kappa) continue;
            const long long prev =
                kappa == 1 ? 0 : trace.fh_events[static_cast<std::size_t>(kappa - 2)].t_global;
            waits.push_back(trace.fh_events[static_cast<std::size_t>(kappa - 1)].t_global - prev);
        }
        if (waits.empty()) continue;
        std::sort(waits.begin(), waits.end());
        HittingRow row;
        row.kappa = kappa;
        row.n_replicas = static_cast<int>(waits.size());
        double sum = 0.0;
        for (const long long w : waits) sum += static_cast<double>(w);
        row.mean = sum / static_cast<double>(waits.size());
        const std::size_t m = waits.size() / 2;
        row.median = waits.size() % 2 == 1
                         ? static_cast<double>(waits[m])
                         : 0.5 * static_cast<double>(waits[m - 1] + waits[m]);
        row.max = waits.back();
        stats.rows.push_back(row);
    }
    return stats;
}

void write_hitting_stats_csv(std::ostream& os, const HittingStats& stats) {
    os << "kappa,n_replicas,mean,median,max\n";
    for (const HittingRow& row : stats.rows) {
        os << row.kappa << ',' << row.n_replicas << ',' << row.mean << ',' << row.median << ','
           << row.max << "\n";
    }
}

void write_hitting_stats_csv(const std::string& path, const HittingStats& stats) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_hitting_stats_csv(os, stats);
}

}  // namespace wl::analysis
