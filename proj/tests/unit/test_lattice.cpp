#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "wl/irreducibility.hpp"
#include "wl/lattice.hpp"
#include "wl/proposal.hpp"
#include "wl/rng.hpp"
#include "wl/target.hpp"

using namespace wl;
using namespace wl::theory;

TEST_CASE("Rational arithmetic") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4) == Rational(-3, 4));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1LL << 62, 3) * Rational(1LL << 62, 5), std::overflow_error);

    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("x/4"), std::invalid_argument);

    std::ostringstream os;
    os << Rational(3, 4) << " " << Rational(5);
    CHECK(os.str() == "3/4 5");
}

TEST_CASE("RationalFrequencies") {
    SUBCASE("common denominator and gcd reduction") {
        const RationalFrequencies phi({Rational(2, 8), Rational(6, 8)});
        CHECK(phi.denominator() == 4);
        CHECK(phi.numerators() == std::vector<long long>{1, 3});
        CHECK(phi.phi(0) == Rational(1, 4));
    }
    SUBCASE("gcd reduction across numerators") {
        const RationalFrequencies phi({Rational(2, 6), Rational(4, 6)});
        CHECK(phi.denominator() == 3);
        CHECK(phi.numerators() == std::vector<long long>{1, 2});
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(RationalFrequencies({Rational(1, 2), Rational(1, 3)}),
                        std::invalid_argument);  // sum != 1
        CHECK_THROWS_AS(RationalFrequencies({Rational(3, 2), Rational(-1, 2)}),
                        std::invalid_argument);  // negative entry
        CHECK_THROWS_AS(RationalFrequencies({Rational(1)}), std::invalid_argument);
    }
}

TEST_CASE("zero_return_path") {
    SUBCASE("phi = (3/4, 1/4) gives n = (3, 1)") {
        const RationalFrequencies phi({Rational(3, 4), Rational(1, 4)});
        const LatticePoint n = zero_return_path(phi);
        CHECK(n.counts == std::vector<long long>{3, 1});
        CHECK(n.total() == 4);
        for (int i = 0; i < 2; ++i) REQUIRE(n.z(i) == Rational(0));
    }
    SUBCASE("phi = (1/2, 1/3, 1/6) gives n = (3, 2, 1)") {
        const RationalFrequencies phi({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
        const LatticePoint n = zero_return_path(phi);
        CHECK(n.counts == std::vector<long long>{3, 2, 1});
        for (int i = 0; i < 3; ++i) REQUIRE(n.z(i) == Rational(0));
    }
    SUBCASE("uniform phi gives the all-ones vector") {
        for (int d = 2; d <= 6; ++d) {
            std::vector<Rational> entries(static_cast<std::size_t>(d), Rational(1, d));
            const LatticePoint n = zero_return_path(RationalFrequencies(entries));
            CHECK(n.counts == std::vector<long long>(static_cast<std::size_t>(d), 1));
        }
    }
}

TEST_CASE("lattice_path") {
    const RationalFrequencies phi({Rational(3, 4), Rational(1, 4)});

    SUBCASE("zero to zero is the zero-return cycle") {
        const LatticePoint zero(phi, {0, 0});
        const auto k = lattice_path(phi, zero, zero);
        CHECK(k == zero_return_path(phi).counts);
        CHECK(verify_lattice_path(phi, zero, k, zero));
    }
    SUBCASE("from m = (1, 0) back to zero with minimal C") {
        const LatticePoint from(phi, {1, 0});
        const LatticePoint zero(phi, {0, 0});
        const auto k = lattice_path(phi, from, zero);
        CHECK(k == std::vector<long long>{2, 1});  // C = 1: k = (3,1) - (1,0)
        CHECK(verify_lattice_path(phi, from, k, zero));
    }
    SUBCASE("mismatched frequencies are a domain error") {
        const RationalFrequencies other({Rational(1, 2), Rational(1, 2)});
        const LatticePoint from(other, {1, 0});
        const LatticePoint to(phi, {0, 0});
        CHECK_THROWS_AS(lattice_path(phi, from, to), std::domain_error);
    }
    SUBCASE("50 random rational phi and endpoints verify exactly") {
        Rng rng(606);
        int done = 0;
        while (done < 50) {
            const int d = 2 + static_cast<int>(uniform01(rng) * 3.0);
            // random positive rationals normalized to sum 1 via a common denominator
            std::vector<long long> parts(static_cast<std::size_t>(d));
            long long total = 0;
            for (auto& p : parts) {
                p = 1 + static_cast<long long>(uniform01(rng) * 9.0);
                total += p;
            }
            if (total > 30) continue;
            std::vector<Rational> entries;
            for (const auto p : parts) entries.emplace_back(p, total);
            const RationalFrequencies rf(entries);

            std::vector<long long> m(static_cast<std::size_t>(d)), mp(static_cast<std::size_t>(d));
            for (auto& v : m) v = static_cast<long long>(uniform01(rng) * 10.0);
            for (auto& v : mp) v = static_cast<long long>(uniform01(rng) * 10.0);
            const LatticePoint from(rf, m), to(rf, mp);
            const auto k = lattice_path(rf, from, to);
            for (const auto ki : k) REQUIRE(ki >= 0);
            REQUIRE(verify_lattice_path(rf, from, k, to));
            ++done;
        }
    }
}

TEST_CASE("irreducibility smoke test") {
    const auto proposal = gaussian_random_walk(1.0);
    const RationalFrequencies phi({Rational(3, 4), Rational(1, 4)});

    SUBCASE("lazy path and small vectors realize with positive frequency") {
        const auto target = truncated_normal_target(0.0, 1.0, {-10.0, 0.0, 10.0});
        const auto report = irreducibility_smoke_test(target, proposal, phi, 1.0, 3000, 42,
                                                      {{3, 0}, {2, 1}});
        REQUIRE(report.cases.size() == 2);
        CHECK(report.cases[0].fraction() > 0.0);  // stay in the starting bin
        CHECK(report.cases[1].fraction() > 0.0);
        CHECK(report.warnings.empty());
    }
    SUBCASE("a zero-mass bin yields a zero fraction and a warning") {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        const auto dead_bin = PartitionedTarget(
            [](double x) { return x > 0.0 ? -kInf : 0.0; }, std::vector<double>{-10.0, 0.0, 10.0});
        const auto report =
            irreducibility_smoke_test(dead_bin, proposal, phi, 1.0, 500, 43, {{1, 2}});
        REQUIRE(report.cases.size() == 1);
        CHECK(report.cases[0].realized == 0);
        REQUIRE(!report.warnings.empty());
        CHECK(report.warnings[0].find("bin 2") != std::string::npos);
    }
    SUBCASE("csv output") {
        const auto target = truncated_normal_target(0.0, 1.0, {-10.0, 0.0, 10.0});
        const auto report =
            irreducibility_smoke_test(target, proposal, phi, 1.0, 200, 44, {{1, 0}});
        std::ostringstream os;
        write_irreducibility_csv(os, report);
        CHECK(os.str().rfind("case,counts,trials,realized,fraction\n", 0) == 0);
    }
}
