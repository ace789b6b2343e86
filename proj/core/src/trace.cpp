#include "wl/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wl {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

[[noreturn]] void format_error(const std::string& name, std::size_t line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": trace format error: " + what);
}

}  // namespace

int z_pair_index(int i, int j, int d) {
    if (i < 1 || j <= i || j > d) throw std::domain_error("z_pair_index: need 1 <= i < j <= d");
    return (i - 1) * (2 * d - i) / 2 + (j - i - 1);
}

double RunTrace::z_at(std::size_t record, int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > d || j > d)
        throw std::domain_error("RunTrace::z_at: invalid pair");
    const bool flip = i > j;
    const int idx = flip ? z_pair_index(j, i, d) : z_pair_index(i, j, d);
    const double v = z[record * static_cast<std::size_t>(num_pairs()) + static_cast<std::size_t>(idx)];
    return flip ? -v : v;
}

void write_trace_csv(std::ostream& os, const RunTrace& trace) {
    os << "t,bin,gamma,kappa,fh_event";
    for (int i = 1; i <= trace.d; ++i)
        for (int j = i + 1; j <= trace.d; ++j) os << ",z_" << i << "_" << j;
    os << "\n";
    const std::size_t pairs = static_cast<std::size_t>(trace.num_pairs());
    for (std::size_t r = 0; r < trace.num_records(); ++r) {
        os << trace.t[r] << ',' << trace.bin[r] << ',' << format_double(trace.gamma[r]) << ','
           << trace.kappa[r] << ',' << static_cast<int>(trace.fh_event[r]);
        for (std::size_t p = 0; p < pairs; ++p) os << ',' << format_double(trace.z[r * pairs + p]);
        os << "\n";
    }
}

void write_trace_csv(const std::string& path, const RunTrace& trace) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_trace_csv(os, trace);
}

RunTrace read_trace_csv(std::istream& is, const std::string& name) {
    std::string line;
    if (!std::getline(is, line)) format_error(name, 1, "empty file");
    const auto header = split_csv(line);
    const char* expected[] = {"t", "bin", "gamma", "kappa", "fh_event"};
    if (header.size() < 6) format_error(name, 1, "missing z columns");
    for (std::size_t k = 0; k < 5; ++k)
        if (header[k] != expected[k]) format_error(name, 1, "unexpected column '" + header[k] + "'");

    const int pairs = static_cast<int>(header.size()) - 5;
    // d(d-1)/2 == pairs
    int d = 2;
    while (d * (d - 1) / 2 < pairs) ++d;
    if (d * (d - 1) / 2 != pairs) format_error(name, 1, "z column count is not d(d-1)/2");
    {
        std::size_t col = 5;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j, ++col) {
                const std::string want = "z_" + std::to_string(i) + "_" + std::to_string(j);
                if (header[col] != want)
                    format_error(name, 1, "expected column '" + want + "', got '" + header[col] + "'");
            }
    }

    RunTrace trace;
    trace.d = d;
    trace.counts.assign(static_cast<std::size_t>(d), 0);
    trace.counts_half.assign(static_cast<std::size_t>(d), 0);

    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != header.size()) format_error(name, line_no, "wrong field count");
        try {
            trace.t.push_back(std::stoll(fields[0]));
            trace.bin.push_back(std::stoi(fields[1]));
            trace.gamma.push_back(std::stod(fields[2]));
            trace.kappa.push_back(std::stoll(fields[3]));
            trace.fh_event.push_back(static_cast<std::uint8_t>(std::stoi(fields[4])));
            for (std::size_t p = 5; p < fields.size(); ++p) trace.z.push_back(std::stod(fields[p]));
        } catch (const std::exception&) {
            format_error(name, line_no, "unparsable field");
        }
        const int bin = trace.bin.back();
        if (bin < 1 || bin > d) format_error(name, line_no, "bin out of range");
    }

    trace.total_steps = trace.t.empty() ? 0 : trace.t.back();
    trace.stride = trace.t.size() >= 2 ? trace.t[1] - trace.t[0] : 1;
    // counts rebuilt from the recorded samples; exact for stride-1 traces
    for (std::size_t r = 0; r < trace.num_records(); ++r) {
        trace.counts[static_cast<std::size_t>(trace.bin[r] - 1)] += 1;
        if (trace.t[r] * 2 <= trace.total_steps)
            trace.counts_half[static_cast<std::size_t>(trace.bin[r] - 1)] += 1;
    }
    return trace;
}

RunTrace read_trace_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    return read_trace_csv(is, path);
}

void write_fh_events_csv(std::ostream& os, const RunTrace& trace) {
    os << "kappa,t_global,gamma_before,gamma_after\n";
    for (const FhEvent& e : trace.fh_events) {
        os << e.kappa << ',' << e.t_global << ',' << format_double(e.gamma_before) << ','
           << format_double(e.gamma_after) << "\n";
    }
}

void write_fh_events_csv(const std::string& path, const RunTrace& trace) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_fh_events_csv(os, trace);
}

}  // namespace wl
