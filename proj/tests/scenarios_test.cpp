#include "k3calc/scenarios.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace k3calc;
using namespace k3calc::testutil;

TEST_CASE("catalog: twelve scenarios, stable order") {
    std::vector<std::string> names = list_scenarios();
    REQUIRE(names.size() == 12);
    CHECK(names.front() == "S1_quartic_residual");
    CHECK(names.back() == "S12_pseudoheight_fano");
}

TEST_CASE("every scenario passes, and run_all preserves catalog order") {
    std::vector<ScenarioReport> reports = run_all();
    REQUIRE(reports.size() == 12);
    std::vector<std::string> names = list_scenarios();
    for (size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].name == names[i]);
        for (const CheckResult& c : reports[i].checks) {
            INFO(reports[i].name << ": " << c.description << " expected " << c.expected
                                 << " got " << c.actual);
            CHECK(c.pass);
        }
        CHECK(reports[i].verdict);
    }
    // run_scenario agrees with the batch run
    for (size_t i = 0; i < names.size(); ++i) CHECK(run_scenario(names[i]) == reports[i]);
}

TEST_CASE("unknown scenario") {
    CHECK_THROWS_WITH_AS(run_scenario("S13_missing"), "unknown scenario 'S13_missing'", Error);
}

TEST_CASE("verify exit code mapping") {
    ScenarioReport pass{"a", {}, true};
    ScenarioReport fail{"b", {}, false};
    CHECK(verify_exit_code({}) == 0);
    CHECK(verify_exit_code({pass, pass}) == 0);
    CHECK(verify_exit_code({pass, fail}) == 1);
    CHECK(verify_exit_code({fail}) == 1);
}

TEST_CASE("wall equation solver") {
    // every returned pair solves the equation
    Rng rng(72001);
    for (int trial = 0; trial < 200; ++trial) {
        Int t = rand_int(rng, -60, 60);
        WallSolutions w = solve_wall_equation(t);
        for (const auto& [d, e] : w.pairs) CHECK(4 * d * d + 6 * d * e == t);
        CHECK(w.degenerate == (t == 0));

        // completeness against a direct two-variable scan
        std::set<std::pair<Int, Int>> brute;
        for (int d = -70; d <= 70; ++d) {
            if (d == 0) continue;
            // 6*d*e = t - 4d^2 must divide exactly
            Int num = t - 4 * Int(d) * d;
            if (num % (6 * Int(d)) != 0) continue;
            brute.insert({Int(d), num / (6 * Int(d))});
        }
        if (t == 0) brute.insert({0, 0});
        std::set<std::pair<Int, Int>> got(w.pairs.begin(), w.pairs.end());
        CHECK(got == brute);
    }

    // ordered by (d, e), no duplicates
    WallSolutions w8 = solve_wall_equation(-8);
    std::vector<std::pair<Int, Int>> expected = {{-4, 3}, {-2, 2}, {-1, 2},
                                                 {1, -2}, {2, -2}, {4, -3}};
    CHECK(w8.pairs == expected);
    CHECK(format_wall_solutions(w8) == "{(-4, 3), (-2, 2), (-1, 2), (1, -2), (2, -2), (4, -3)}");

    CHECK(solve_wall_equation(-6).pairs.empty());
    CHECK(solve_wall_equation(-4).pairs.empty());
    CHECK(solve_wall_equation(-5).pairs.empty());  // odd target: impossible
    WallSolutions w0 = solve_wall_equation(0);
    CHECK(w0.degenerate);
    CHECK(w0.pairs == std::vector<std::pair<Int, Int>>{{0, 0}});
    CHECK(format_wall_solutions(w0) == "{(0, 0)} [degenerate: d=0 admits every e]");
}

TEST_CASE("forbidden lattice catalog") {
    const std::vector<IntMat>& cat = forbidden_lattice_catalog();
    REQUIRE(cat.size() == 2);
    CHECK(cat[0] == IntMat::from_rows({{10, 1}, {1, 0}}));
    CHECK(cat[1] == IntMat::from_rows({{10, 3}, {3, 0}}));
}
