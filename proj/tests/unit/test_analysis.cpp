#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "wl/analysis.hpp"
#include "wl/driver.hpp"
#include "wl/svg.hpp"

using namespace wl;
using namespace wl::analysis;

namespace {

// frozen by an independent high-precision evaluation of
// log(7) / (log 5 + log(7/3))
constexpr double kLogFormLimit075 = 0.7920714024612582;

RunTrace synthetic_trace(const std::vector<int>& bins, UpdateRule rule, double phi1, double gamma) {
    const DesiredFrequencies phi({phi1, 1.0 - phi1});
    RunTrace trace;
    trace.d = 2;
    trace.total_steps = static_cast<long long>(bins.size());
    trace.counts.assign(2, 0);
    trace.counts_half.assign(2, 0);
    std::vector<double> log_theta{0.0, 0.0};
    for (std::size_t k = 0; k < bins.size(); ++k) {
        apply_update_in_place(rule, log_theta, bins[k], phi, gamma);
        trace.t.push_back(static_cast<long long>(k + 1));
        trace.bin.push_back(bins[k]);
        trace.gamma.push_back(gamma);
        trace.kappa.push_back(0);
        trace.fh_event.push_back(0);
        trace.z.push_back(log_theta[0] - log_theta[1]);
        trace.counts[static_cast<std::size_t>(bins[k] - 1)] += 1;
        if (static_cast<long long>(k + 1) <= trace.total_steps / 2)
            trace.counts_half[static_cast<std::size_t>(bins[k] - 1)] += 1;
    }
    trace.final_log_theta = log_theta;
    return trace;
}

}  // namespace

TEST_CASE("predict_limit: linear gives phi back") {
    const auto lp = predict_limit(UpdateRule::Linear, 0.75, 1.0);
    CHECK(lp.bin1 == 0.75);  // exact for dyadic inputs
    CHECK(lp.bin2 == 0.25);
    const auto lp2 = predict_limit(UpdateRule::Linear, DesiredFrequencies({0.6, 0.4}), 0.3);
    CHECK(lp2.bin1 == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("predict_limit: logform bias at phi1 = 0.75, gamma = 1") {
    const auto lp = predict_limit(UpdateRule::LogForm, 0.75, 1.0);
    CHECK(lp.bin1 == doctest::Approx(kLogFormLimit075).epsilon(1e-12));
    CHECK(lp.bin2 == doctest::Approx(1.0 - kLogFormLimit075).epsilon(1e-12));
    CHECK(std::abs(lp.bin1 - 0.75) > 1e-6);   // the rules genuinely differ
    CHECK(std::abs(lp.bin1 - 0.75) > 0.04);   // by a macroscopic margin here

    // cross-check against the increment form b/(a+b)
    const auto inc = z_increments(UpdateRule::LogForm, 0.75, 1.0);
    CHECK(lp.bin1 == doctest::Approx(inc.b / (inc.a + inc.b)).epsilon(1e-14));
}

TEST_CASE("predict_limit: logform is unbiased at phi = 1/2") {
    for (const double gamma : {0.1, 0.5, 0.9}) {
        const auto lp = predict_limit(UpdateRule::LogForm, 0.5, gamma);
        CHECK(std::abs(lp.bin1 - 0.5) <= 1e-12);
        CHECK(std::abs(lp.bin2 - 0.5) <= 1e-12);
    }
}

TEST_CASE("predict_limit: validation") {
    CHECK_THROWS_AS(predict_limit(UpdateRule::Linear, DesiredFrequencies({0.5, 0.3, 0.2}), 1.0),
                    std::invalid_argument);  // formula is d=2 only
    CHECK_THROWS_AS(predict_limit(UpdateRule::LogForm, 0.75, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(predict_limit(UpdateRule::Linear, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("predict_limit_exact: rational identity for 100 random (phi1, gamma)") {
    Rng rng(44);
    for (int rep = 0; rep < 100; ++rep) {
        const long long q = 2 + static_cast<long long>(uniform01(rng) * 40);
        const long long p = std::min(q - 1, 1 + static_cast<long long>(uniform01(rng) * double(q)));
        const Rational phi1(p, q);
        const Rational gamma(1 + static_cast<long long>(uniform01(rng) * 24), 12);
        const auto [l1, l2] = predict_limit_exact(phi1, gamma);
        REQUIRE(l1 == phi1);
        REQUIRE(l2 == Rational(1) - phi1);
    }
}

TEST_CASE("frequency_trace") {
    SUBCASE("single record") {
        const auto trace = synthetic_trace({1}, UpdateRule::Linear, 0.75, 1.0);
        const auto ft = frequency_trace(trace);
        CHECK(ft.at(0, 1) == 1.0);
        CHECK(ft.at(0, 2) == 0.0);
    }
    SUBCASE("alternating bins end at (1/2, 1/2), rows sum to 1") {
        const auto trace = synthetic_trace({1, 2, 1, 2, 1, 2}, UpdateRule::Linear, 0.5, 1.0);
        const auto ft = frequency_trace(trace);
        CHECK(ft.at(5, 1) == 0.5);
        for (std::size_t r = 0; r < ft.times.size(); ++r)
            REQUIRE(ft.at(r, 1) + ft.at(r, 2) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("empty trace is an error") {
        RunTrace empty;
        empty.d = 2;
        CHECK_THROWS_AS(frequency_trace(empty), std::invalid_argument);
    }
}

TEST_CASE("z_trajectory") {
    SUBCASE("constant penalties give a constant series") {
        RunTrace trace;
        trace.d = 2;
        for (int k = 0; k < 5; ++k) {
            trace.t.push_back(k + 1);
            trace.bin.push_back(1);
            trace.gamma.push_back(0.1);
            trace.kappa.push_back(0);
            trace.fh_event.push_back(0);
            trace.z.push_back(0.7);
        }
        const auto zs = z_trajectory(trace, 1, 2);
        for (const double z : zs) REQUIRE(z == 0.7);
        const auto flipped = z_trajectory(trace, 2, 1);
        for (const double z : flipped) REQUIRE(z == -0.7);
    }
    SUBCASE("all visits to bin 1: Z_t = t * a") {
        const std::vector<int> bins(50, 1);
        const double gamma = 0.25, phi1 = 0.75;
        const auto trace = synthetic_trace(bins, UpdateRule::Linear, phi1, gamma);
        const auto zs = z_trajectory(trace, 1, 2);
        const double a = 2.0 * gamma * (1.0 - phi1);
        for (std::size_t k = 0; k < zs.size(); ++k)
            REQUIRE(zs[k] ==
                    doctest::Approx(static_cast<double>(k + 1) * a).epsilon(1e-12));
    }
    SUBCASE("replaying the updates over the bin sequence reproduces the stored columns") {
        const auto target = truncated_normal_target(0.0, 1.0, {-10.0, 0.0, 10.0});
        const auto proposal = gaussian_random_walk(1.0);
        const DesiredFrequencies phi({0.75, 0.25});
        FhParams params;
        params.gamma_decay = 0.9;
        const RunTrace trace =
            run_wl_fh(target, proposal, UpdateRule::Linear, phi, params, 20000, 8);
        const auto zs = z_trajectory(trace, 1, 2);

        std::vector<double> log_theta{-std::log(2.0), -std::log(2.0)};
        for (std::size_t r = 0; r < trace.num_records(); ++r) {
            apply_update_in_place(UpdateRule::Linear, log_theta, trace.bin[r], phi,
                                  trace.gamma[r]);
            REQUIRE(std::abs((log_theta[0] - log_theta[1]) - zs[r]) < 1e-9);
        }
    }
    SUBCASE("index validation and missing columns") {
        RunTrace trace;
        trace.d = 2;
        trace.t = {1};
        trace.bin = {1};
        CHECK_THROWS_AS(z_trajectory(trace, 1, 1), std::domain_error);
        CHECK_THROWS_AS(z_trajectory(trace, 1, 3), std::domain_error);
        CHECK_THROWS_AS(z_trajectory(trace, 1, 2), std::runtime_error);  // z column absent
    }
}

TEST_CASE("penalty-ratio drift vanishes at fixed gamma (linear)") {
    const auto target = truncated_normal_target(0.0, 1.0, {-10.0, 0.0, 10.0});
    const auto proposal = gaussian_random_walk(1.0);
    const DesiredFrequencies phi({0.75, 0.25});
    FhParams params;
    params.gamma0 = 1.0;
    params.gamma_decay = 1.0;  // fixed gamma
    params.c0 = 0.05;
    RunOptions opts;
    opts.stride = 100000;
    const RunTrace trace =
        run_wl_fh(target, proposal, UpdateRule::Linear, phi, params, 100000, 5150, opts);
    const double z_final = trace.final_log_theta[0] - trace.final_log_theta[1];
    CHECK(std::abs(z_final) / 100000.0 < 0.01);
}

TEST_CASE("final and last-half frequencies from the exact counts") {
    const auto trace = synthetic_trace({1, 1, 2, 1, 1, 2, 2, 2}, UpdateRule::Linear, 0.5, 0.1);
    const auto fin = final_frequencies(trace);
    CHECK(fin[0] == doctest::Approx(0.5));
    const auto lh = last_half_frequencies(trace);  // last 4: {1, 2, 2, 2}
    CHECK(lh[0] == doctest::Approx(0.25));
    CHECK(lh[1] == doctest::Approx(0.75));
}

TEST_CASE("fh_hitting_stats") {
    SUBCASE("bookkeeping across replicas") {
        RunTrace a, b, c;
        a.fh_events = {{1, 10, 1.0, 0.5}, {2, 30, 0.5, 0.25}};
        b.fh_events = {{1, 20, 1.0, 0.5}, {2, 36, 0.5, 0.25}, {3, 100, 0.25, 0.125}};
        // c has no events
        const auto stats = fh_hitting_stats({a, b, c});
        REQUIRE(stats.rows.size() == 3);
        CHECK(stats.rows[0].kappa == 1);
        CHECK(stats.rows[0].n_replicas == 2);
        CHECK(stats.rows[0].mean == doctest::Approx(15.0));  // waits 10 and 20
        CHECK(stats.rows[0].median == doctest::Approx(15.0));
        CHECK(stats.rows[0].max == 20);
        CHECK(stats.rows[1].mean == doctest::Approx(18.0));  // waits 20 and 16
        CHECK(stats.rows[2].n_replicas == 1);
        CHECK(stats.rows[2].max == 64);
        REQUIRE(stats.zero_fh_replicas == std::vector<int>{2});

        std::ostringstream os;
        write_hitting_stats_csv(os, stats);
        CHECK(os.str().rfind("kappa,n_replicas,mean,median,max\n", 0) == 0);
    }
    SUBCASE("empty collection is an error") {
        CHECK_THROWS_AS(fh_hitting_stats({}), std::invalid_argument);
    }
}

TEST_CASE("empirical last-half frequency matches the predicted logform limit") {
    const auto target = truncated_normal_target(0.0, 1.0, {-10.0, 0.0, 10.0});
    const auto proposal = gaussian_random_walk(1.0);
    const DesiredFrequencies phi({0.75, 0.25});
    FhParams params;
    params.gamma0 = 1.0;
    params.gamma_decay = 1.0;
    params.c0 = 0.01;
    RunOptions opts;
    opts.stride = 100000;
    const auto traces = run_replicas(8, 909, 0, [&](std::uint64_t seed) {
        return run_wl_fh(target, proposal, UpdateRule::LogForm, phi, params, 200000, seed, opts);
    });
    double mean = 0.0;
    for (const auto& trace : traces) mean += last_half_frequencies(trace)[0];
    mean /= 8.0;
    const auto lp = predict_limit(UpdateRule::LogForm, 0.75, 1.0);
    CHECK(std::abs(mean - lp.bin1) < 0.01);
}

TEST_CASE("frequency svg is written and mentions every bin") {
    const auto trace = synthetic_trace({1, 2, 1, 1, 2, 1}, UpdateRule::Linear, 0.75, 0.5);
    std::ostringstream os;
    write_frequency_svg(os, frequency_trace(trace), {0.75, 0.25}, "test plot");
    const std::string svg = os.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("bin 1") != std::string::npos);
    CHECK(svg.find("bin 2") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // dotted phi lines
}
