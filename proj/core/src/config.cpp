#include "wl/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace wl {

bool operator==(const TargetSpec& x, const TargetSpec& y) {
    return x.kind == y.kind && x.mean == y.mean && x.sd == y.sd;
}
bool operator==(const ProposalSpec& x, const ProposalSpec& y) {
    return x.kind == y.kind && x.sd == y.sd;
}
bool operator==(const FhParams& x, const FhParams& y) {
    return x.gamma0 == y.gamma0 && x.gamma_decay == y.gamma_decay && x.c0 == y.c0 &&
           x.c_decay == y.c_decay;
}
bool operator==(const ScheduleSpec& x, const ScheduleSpec& y) {
    return x.kind == y.kind && x.alpha == y.alpha && x.fh == y.fh;
}

namespace {

struct Entry {
    std::string value;
    std::size_t line = 0;
    mutable bool used = false;
};

using KeyMap = std::map<std::string, Entry>;

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
    throw ConfigError(name + ":" + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

KeyMap read_keys(std::istream& is, const std::string& name) {
    KeyMap keys;
    std::string line;
    std::string section;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(name, line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) fail(name, line_no, "empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(name, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(name, line_no, "empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        if (keys.count(full)) fail(name, line_no, "duplicate key '" + full + "'");
        keys[full] = Entry{value, line_no, false};
    }
    return keys;
}

const Entry* find(const KeyMap& keys, const std::string& key) {
    const auto it = keys.find(key);
    if (it == keys.end()) return nullptr;
    it->second.used = true;
    return &it->second;
}

double parse_double(const std::string& name, const std::string& key, const Entry& e) {
    char* end = nullptr;
    const double v = std::strtod(e.value.c_str(), &end);
    if (end == e.value.c_str() || *end != '\0')
        fail(name, e.line, "field " + key + ": expected a number, got '" + e.value + "'");
    return v;
}

long long parse_int(const std::string& name, const std::string& key, const Entry& e) {
    char* end = nullptr;
    const long long v = std::strtoll(e.value.c_str(), &end, 10);
    if (end == e.value.c_str() || *end != '\0')
        fail(name, e.line, "field " + key + ": expected an integer, got '" + e.value + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& name, const std::string& key,
                                      const Entry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(name, e.line, "field " + key + ": empty list element");
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            fail(name, e.line, "field " + key + ": expected a number, got '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) fail(name, e.line, "field " + key + ": empty list");
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ExperimentConfig parse_config(std::istream& is, const std::string& name) {
    const KeyMap keys = read_keys(is, name);
    ExperimentConfig config;

    if (const Entry* e = find(keys, "target.kind")) config.target.kind = e->value;
    if (const Entry* e = find(keys, "target.mean"))
        config.target.mean = parse_double(name, "target.mean", *e);
    if (const Entry* e = find(keys, "target.sd"))
        config.target.sd = parse_double(name, "target.sd", *e);

    if (const Entry* e = find(keys, "proposal.kind")) config.proposal.kind = e->value;
    if (const Entry* e = find(keys, "proposal.sd"))
        config.proposal.sd = parse_double(name, "proposal.sd", *e);

    if (const Entry* e = find(keys, "bins.edges"))
        config.bin_edges = parse_double_list(name, "bins.edges", *e);
    else
        fail(name, 0, "missing required field bins.edges");

    if (const Entry* e = find(keys, "run.phi"))
        config.phi = parse_double_list(name, "run.phi", *e);
    else
        fail(name, 0, "missing required field run.phi");

    if (const Entry* e = find(keys, "run.rule")) {
        try {
            config.rule = update_rule_from_string(e->value);
        } catch (const std::invalid_argument& err) {
            fail(name, e->line, std::string("field run.rule: ") + err.what());
        }
    }
    if (const Entry* e = find(keys, "run.schedule")) {
        if (e->value == "deterministic")
            config.schedule.kind = ScheduleKind::Deterministic;
        else if (e->value == "fh")
            config.schedule.kind = ScheduleKind::FlatHistogram;
        else
            fail(name, e->line, "field run.schedule: expected 'deterministic' or 'fh'");
    }
    if (const Entry* e = find(keys, "run.steps")) config.steps = parse_int(name, "run.steps", *e);
    if (const Entry* e = find(keys, "run.seed"))
        config.seed = static_cast<std::uint64_t>(parse_int(name, "run.seed", *e));
    if (const Entry* e = find(keys, "run.replicas"))
        config.replicas = static_cast<int>(parse_int(name, "run.replicas", *e));
    if (const Entry* e = find(keys, "run.stride"))
        config.stride = parse_int(name, "run.stride", *e);
    if (const Entry* e = find(keys, "run.x0")) config.x0 = parse_double(name, "run.x0", *e);

    if (const Entry* e = find(keys, "schedule.deterministic.alpha"))
        config.schedule.alpha = parse_double(name, "schedule.deterministic.alpha", *e);
    if (const Entry* e = find(keys, "schedule.fh.gamma0"))
        config.schedule.fh.gamma0 = parse_double(name, "schedule.fh.gamma0", *e);
    if (const Entry* e = find(keys, "schedule.fh.gamma_decay"))
        config.schedule.fh.gamma_decay = parse_double(name, "schedule.fh.gamma_decay", *e);
    if (const Entry* e = find(keys, "schedule.fh.c"))
        config.schedule.fh.c0 = parse_double(name, "schedule.fh.c", *e);
    if (const Entry* e = find(keys, "schedule.fh.c_decay"))
        config.schedule.fh.c_decay = parse_double(name, "schedule.fh.c_decay", *e);

    if (const Entry* e = find(keys, "output.dir")) config.out_dir = e->value;

    for (const auto& [key, entry] : keys) {
        if (!entry.used) fail(name, entry.line, "unknown field '" + key + "'");
    }

    validate_config(config, name);
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(is, path);
}

void validate_config(const ExperimentConfig& config, const std::string& name) {
    const auto bad = [&name](const std::string& field, const std::string& what) {
        throw ConfigError(name + ": field " + field + ": " + what);
    };

    if (config.target.kind != "truncated_normal" && config.target.kind != "uniform")
        bad("target.kind", "expected 'truncated_normal' or 'uniform'");
    if (!(config.target.sd > 0.0)) bad("target.sd", "must be positive");
    if (config.proposal.kind != "gaussian_walk")
        bad("proposal.kind", "expected 'gaussian_walk'");
    if (!(config.proposal.sd > 0.0)) bad("proposal.sd", "must be positive");

    if (config.bin_edges.size() < 3) bad("bins.edges", "need at least 3 edges (2 bins)");
    for (std::size_t k = 0; k + 1 < config.bin_edges.size(); ++k)
        if (!(config.bin_edges[k] < config.bin_edges[k + 1]))
            bad("bins.edges", "edges must be strictly increasing");

    if (config.phi.size() != config.bin_edges.size() - 1)
        bad("run.phi", "needs one entry per bin");
    try {
        DesiredFrequencies check(config.phi);
    } catch (const std::invalid_argument& err) {
        bad("run.phi", err.what());
    }

    if (config.steps < 1) bad("run.steps", "must be >= 1");
    if (config.replicas < 1) bad("run.replicas", "must be >= 1");
    if (config.stride < 1) bad("run.stride", "must be >= 1");
    if (config.x0 &&
        !(*config.x0 >= config.bin_edges.front() && *config.x0 <= config.bin_edges.back()))
        bad("run.x0", "must lie inside the support");

    if (config.schedule.kind == ScheduleKind::Deterministic) {
        try {
            deterministic_gamma(1, config.schedule.alpha);
        } catch (const std::invalid_argument& err) {
            bad("schedule.deterministic.alpha", err.what());
        }
    } else {
        try {
            validate(config.schedule.fh);
        } catch (const std::invalid_argument& err) {
            bad("schedule.fh", err.what());
        }
    }

    if (config.rule == UpdateRule::LogForm) {
        const double gamma_max = config.schedule.kind == ScheduleKind::Deterministic
                                     ? 1.0
                                     : config.schedule.fh.gamma0;
        try {
            check_logform_gamma(DesiredFrequencies(config.phi), gamma_max);
        } catch (const std::invalid_argument& err) {
            bad("run.rule", err.what());
        }
    }
}

std::string serialize_config(const ExperimentConfig& config) {
    std::ostringstream os;
    os << "[target]\n"
       << "kind = " << config.target.kind << "\n"
       << "mean = " << format_double(config.target.mean) << "\n"
       << "sd = " << format_double(config.target.sd) << "\n\n";
    os << "[proposal]\n"
       << "kind = " << config.proposal.kind << "\n"
       << "sd = " << format_double(config.proposal.sd) << "\n\n";
    os << "[bins]\n"
       << "edges = ";
    for (std::size_t k = 0; k < config.bin_edges.size(); ++k) {
        if (k) os << ", ";
        os << format_double(config.bin_edges[k]);
    }
    os << "\n\n[run]\n"
       << "rule = " << to_string(config.rule) << "\n"
       << "schedule = "
       << (config.schedule.kind == ScheduleKind::Deterministic ? "deterministic" : "fh") << "\n"
       << "phi = ";
    for (std::size_t k = 0; k < config.phi.size(); ++k) {
        if (k) os << ", ";
        os << format_double(config.phi[k]);
    }
    os << "\nsteps = " << config.steps << "\n"
       << "seed = " << config.seed << "\n"
       << "replicas = " << config.replicas << "\n"
       << "stride = " << config.stride << "\n";
    if (config.x0) os << "x0 = " << format_double(*config.x0) << "\n";
    os << "\n[schedule.deterministic]\n"
       << "alpha = " << format_double(config.schedule.alpha) << "\n\n"
       << "[schedule.fh]\n"
       << "gamma0 = " << format_double(config.schedule.fh.gamma0) << "\n"
       << "gamma_decay = " << format_double(config.schedule.fh.gamma_decay) << "\n"
       << "c = " << format_double(config.schedule.fh.c0) << "\n"
       << "c_decay = " << format_double(config.schedule.fh.c_decay) << "\n";
    if (!config.out_dir.empty()) os << "\n[output]\ndir = " << config.out_dir << "\n";
    return os.str();
}

PartitionedTarget build_target(const ExperimentConfig& config) {
    if (config.target.kind == "uniform") return uniform_target(config.bin_edges);
    return truncated_normal_target(config.target.mean, config.target.sd, config.bin_edges);
}

ProposalKernel build_proposal(const ExperimentConfig& config) {
    return gaussian_random_walk(config.proposal.sd);
}

DesiredFrequencies build_frequencies(const ExperimentConfig& config) {
    return DesiredFrequencies(config.phi);
}

std::string resolve_out_dir(const ExperimentConfig& config) {
    if (!config.out_dir.empty()) return config.out_dir;
    if (const char* env = std::getenv("WL_OUT_DIR"); env && *env) return env;
    return "wl_out";
}

}  // namespace wl
