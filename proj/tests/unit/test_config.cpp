#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wl/config.hpp"
#include "wl/experiment.hpp"

using namespace wl;

namespace {

std::string minimal_config() {
    return "[target]\n"
           "kind = truncated_normal\n"
           "mean = 0\n"
           "sd = 1\n"
           "[proposal]\n"
           "kind = gaussian_walk\n"
           "sd = 1\n"
           "[bins]\n"
           "edges = -10, 0, 10\n"
           "[run]\n"
           "rule = linear\n"
           "schedule = fh\n"
           "phi = 0.75, 0.25\n"
           "steps = 500\n"
           "seed = 11\n"
           "replicas = 2\n"
           "stride = 5\n"
           "x0 = 0\n"
           "[schedule.fh]\n"
           "gamma0 = 1\n"
           "gamma_decay = 0.999\n"
           "c = 0.05\n"
           "c_decay = 1\n";
}

ExperimentConfig parse_string(const std::string& text, const std::string& name = "test.cfg") {
    std::istringstream is(text);
    return parse_config(is, name);
}

}  // namespace

TEST_CASE("config parses, fields land where expected") {
    const ExperimentConfig config = parse_string(minimal_config());
    CHECK(config.target.kind == "truncated_normal");
    CHECK(config.bin_edges == std::vector<double>{-10.0, 0.0, 10.0});
    CHECK(config.phi == std::vector<double>{0.75, 0.25});
    CHECK(config.rule == UpdateRule::Linear);
    CHECK(config.schedule.kind == ScheduleKind::FlatHistogram);
    CHECK(config.schedule.fh.gamma_decay == 0.999);
    CHECK(config.steps == 500);
    CHECK(config.replicas == 2);
    CHECK(config.x0.has_value());
}

TEST_CASE("config round trip: parse(serialize(parse(text))) == parse(text)") {
    const ExperimentConfig config = parse_string(minimal_config());
    const std::string serialized = serialize_config(config);
    const ExperimentConfig back = parse_string(serialized);
    REQUIRE(back == config);
    // serialization is canonical: a second round trip is bit-identical
    REQUIRE(serialize_config(back) == serialized);
}

TEST_CASE("config diagnostics name the file, line and field") {
    SUBCASE("schedule constraint") {
        std::string text = minimal_config();
        text += "[schedule.deterministic]\nalpha = 0.4\n";
        text.replace(text.find("schedule = fh"), 13, "schedule = deterministic");
        try {
            parse_string(text, "toy.cfg");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("toy.cfg") != std::string::npos);
            CHECK(msg.find("alpha") != std::string::npos);
        }
    }
    SUBCASE("unknown key carries its line number") {
        const std::string text = minimal_config() + "typo_key = 3\n";
        try {
            parse_string(text, "toy.cfg");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("typo_key") != std::string::npos);
            CHECK(msg.find("toy.cfg:") != std::string::npos);
        }
    }
    SUBCASE("phi must sum to 1") {
        std::string text = minimal_config();
        text.replace(text.find("phi = 0.75, 0.25"), 16, "phi = 0.75, 0.35");
        CHECK_THROWS_AS(parse_string(text), ConfigError);
    }
    SUBCASE("logform needs gamma0 within its bound") {
        std::string text = minimal_config();
        text.replace(text.find("rule = linear"), 13, "rule = logform");
        text.replace(text.find("gamma0 = 1"), 10, "gamma0 = 2");
        CHECK_THROWS_AS(parse_string(text), ConfigError);
    }
    SUBCASE("malformed lines") {
        CHECK_THROWS_AS(parse_string("[target\nkind = uniform\n"), ConfigError);
        CHECK_THROWS_AS(parse_string("just words\n"), ConfigError);
        CHECK_THROWS_AS(parse_string(minimal_config() + "steps = 5\n"), ConfigError);  // dup section-less
    }
}

TEST_CASE("out dir resolution: config, then WL_OUT_DIR, then default") {
    ExperimentConfig config = parse_string(minimal_config());
    config.out_dir = "explicit";
    CHECK(resolve_out_dir(config) == "explicit");
    config.out_dir.clear();
    setenv("WL_OUT_DIR", "/tmp/wl_env_test", 1);
    CHECK(resolve_out_dir(config) == "/tmp/wl_env_test");
    unsetenv("WL_OUT_DIR");
    CHECK(resolve_out_dir(config) == "wl_out");
}

TEST_CASE("run_experiment writes the artifact set and is reproducible") {
    ExperimentConfig config = parse_string(minimal_config());
    const std::string dir = "/tmp/wl_test_experiment";
    std::filesystem::remove_all(dir);
    config.out_dir = dir;

    const ExperimentResult result = run_experiment(config, 2);
    REQUIRE(result.replicas.size() == 2);
    for (const char* name :
         {"replica_000_trace.csv", "replica_000_fh.csv", "replica_000_freq.svg",
          "replica_001_trace.csv", "summary.csv", "fh_waiting_times.csv"}) {
        CAPTURE(name);
        REQUIRE(std::filesystem::exists(dir + "/" + name));
    }
    for (const auto& row : result.replicas) {
        CHECK(row.final_freq.size() == 2);
        CHECK(row.final_freq[0] + row.final_freq[1] == doctest::Approx(1.0));
    }

    // bit-identical artifacts on a rerun with the same config + seed
    const auto slurp = [](const std::string& path) {
        std::ifstream is(path, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    const std::string first = slurp(dir + "/replica_000_trace.csv");
    run_experiment(config, 1);  // different worker count must not matter
    REQUIRE(slurp(dir + "/replica_000_trace.csv") == first);

    std::filesystem::remove_all(dir);
}

TEST_CASE("summary csv has one row per replica and the declared header") {
    ExperimentConfig config = parse_string(minimal_config());
    std::vector<ReplicaSummary> rows(2);
    rows[0].final_freq = {0.7, 0.3};
    rows[0].last_half_freq = {0.7, 0.3};
    rows[0].final_z = {0.5};
    rows[1] = rows[0];
    rows[1].replica = 1;
    std::ostringstream os;
    write_summary_csv(os, rows, 2);
    const std::string text = os.str();
    CHECK(text.rfind("replica,seed,steps,kappa,fh_events,freq_1,freq_2,last_half_freq_1,"
                     "last_half_freq_2,final_z_1_2\n",
                     0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
