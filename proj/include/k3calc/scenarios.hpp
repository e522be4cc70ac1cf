#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3calc/lattice.hpp"

namespace k3calc {

struct CheckResult {
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;

    bool operator==(const CheckResult&) const = default;
};

struct ScenarioReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool verdict = false;  // AND of all checks

    bool operator==(const ScenarioReport&) const = default;
};

// Catalog order is fixed; run_all computes scenarios concurrently but always
// reports in this order.
std::vector<std::string> list_scenarios();
ScenarioReport run_scenario(const std::string& name);
std::vector<ScenarioReport> run_all();

// 0 if every verdict passes, 1 otherwise (the `verify` exit-code contract).
int verify_exit_code(const std::vector<ScenarioReport>& reports);

// Degree-10 rank-2 Grams excluded from the relevant Picard lattices,
// polarization-first basis convention.
const std::vector<IntMat>& forbidden_lattice_catalog();

// All integer solutions of 4d^2 + 6de = target, ordered by (d, e). target = 0
// has infinite solution lines; only the representative (0,0) is returned and
// the degenerate flag is set.
struct WallSolutions {
    std::vector<std::pair<Int, Int>> pairs;
    bool degenerate = false;
};
WallSolutions solve_wall_equation(const Int& target);
std::string format_wall_solutions(const WallSolutions& w);

}  // namespace k3calc
