// Integration tests driving the installed binary end to end.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "k3calc/json_io.hpp"

#ifndef K3CALC_BIN
#error "K3CALC_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(K3CALC_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify: single scenario and full run exit 0") {
    RunResult one = run_cli("verify scenario S1_quartic_residual");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.output, "S1_quartic_residual"));
    CHECK(contains(one.output, "1/1 scenarios passed"));

    RunResult all = run_cli("verify scenario --all");
    CHECK(all.exit_code == 0);
    CHECK(contains(all.output, "12/12 scenarios passed"));
}

TEST_CASE("verify: --json emits a byte-stable report array") {
    std::filesystem::path out = std::filesystem::temp_directory_path() / "k3calc_report.json";
    std::filesystem::remove(out);
    RunResult r = run_cli("verify scenario S6_wall_spherical --json " + out.string());
    REQUIRE(r.exit_code == 0);

    std::ifstream in(out, std::ios::binary);
    REQUIRE(in.good());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<k3calc::ScenarioReport> reports =
        k3calc::reports_from_json(k3calc::parse_json_text(bytes, "emitted report"));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].name == "S6_wall_spherical");
    CHECK(reports[0].verdict);
    CHECK(k3calc::serialize_reports(reports) == bytes);  // parse -> re-serialize, byte-identical
    std::filesystem::remove(out);
}

TEST_CASE("verify: usage errors exit 2") {
    CHECK(run_cli("verify scenario").exit_code == 2);                 // neither name nor --all
    CHECK(run_cli("verify scenario S1_quartic_residual --all").exit_code == 2);
    RunResult unknown = run_cli("verify scenario S99_nope");
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.output, "unknown scenario 'S99_nope'"));
}

TEST_CASE("lattice subcommands") {
    std::filesystem::path f = write_temp("k3calc_picard_quartic_line.json",
                                         R"({"labels": ["D", "E"], "gram": [[4, 3], [3, 0]]})");
    RunResult det = run_cli("lattice det --input " + f.string());
    CHECK(det.exit_code == 0);
    CHECK(det.output == "-9\n");

    RunResult sig = run_cli("lattice sig --input " + f.string());
    CHECK(sig.exit_code == 0);
    CHECK(sig.output == "(1, 1, 0)\n");

    RunResult snf = run_cli("lattice snf --input " + f.string());
    CHECK(snf.exit_code == 0);
    CHECK(snf.output == "diag(1, 9)\n");

    RunResult cone = run_cli("lattice dualcone --input " + f.string() +
                             " --gens \"[[0,1],[1,-1]]\"");
    CHECK(cone.exit_code == 0);
    CHECK(cone.output == "(3, -1)\n(0, 1)\n");

    RunResult sat = run_cli("lattice saturate --input " + f.string() + " --gens \"[[2,0]]\"");
    CHECK(sat.exit_code == 0);
    CHECK((sat.output == "(1, 0)\n" || sat.output == "(-1, 0)\n"));

    RunResult comp = run_cli("lattice complement --input " + f.string() + " --gens \"[[0,1]]\"");
    CHECK(comp.exit_code == 0);
    // (v, E) = 3x, so E^perp = {x = 0} = span{(0, 1)} up to sign
    CHECK((comp.output == "(0, 1)\n" || comp.output == "(0, -1)\n"));

    CHECK(run_cli("lattice det --input /nonexistent.json").exit_code == 2);
    CHECK(run_cli("lattice complement --input " + f.string()).exit_code == 2);  // no gens
    CHECK(run_cli("lattice frobnicate --input " + f.string()).exit_code == 2);
    std::filesystem::remove(f);
}

TEST_CASE("isometry apply: tabulated image") {
    RunResult r = run_cli(
        "isometry apply --model quartic_with_line "
        "--word \"shift tw:O lb:D tw:O lb:D\" --vector \"(0,0,1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(-2, D, -1)\ntranscendental sign: -1\n");

    RunResult bad = run_cli("isometry apply --model quartic_with_line --word \"tw:Q\" "
                            "--vector \"(0,0,1)\"");
    CHECK(bad.exit_code == 2);

    // model from a JSON file
    std::filesystem::path f = write_temp("k3calc_model.json", R"({
        "name": "custom", "picard": {"labels": ["A"], "gram": [[4]]},
        "polarization": [1]})");
    RunResult custom = run_cli("isometry apply --model " + f.string() +
                               " --word \"lb:A\" --vector \"(1,0,0)\"");
    CHECK(custom.exit_code == 0);
    CHECK(custom.output == "(1, A, 2)\ntranscendental sign: +1\n");
    std::filesystem::remove(f);
}

TEST_CASE("cohomology subcommand") {
    RunResult r = run_cli("cohomology --m 2 --n 3 --coeff Cx");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "Z/2\n");

    RunResult sum = run_cli("cohomology --m 6 --n 4 --coeff \"Cx+Z\"");
    CHECK(sum.exit_code == 0);
    CHECK(sum.output == "Z/6\n");

    CHECK(run_cli("cohomology --m 1 --n 3 --coeff Cx").exit_code == 2);
    CHECK(run_cli("cohomology --m 2 --n -1 --coeff Cx").exit_code == 2);
    CHECK(run_cli("cohomology --m 2 --n 3 --coeff Qx").exit_code == 2);
}

TEST_CASE("pseudoheight subcommand") {
    std::filesystem::path f = write_temp("k3calc_table.json", R"({
        "n": 2, "rel_dim": 3, "sheaf_mode": true,
        "e_plain": {"1,2": 0},
        "e_serre": {"1,1": 3, "2,2": 3, "2,1": 3}})");
    RunResult r = run_cli("pseudoheight --input " + f.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "pseudoheight: 2\nisomorphism for i <= 0\ninjection at i = 1\n"
          "connected by criterion: true\n");
    std::filesystem::remove(f);

    std::filesystem::path bad = write_temp("k3calc_table_bad.json", R"({
        "n": 2, "rel_dim": 3, "sheaf_mode": true,
        "e_plain": {"1,2": -1},
        "e_serre": {"1,1": 3, "2,2": 3, "2,1": 3}})");
    RunResult rb = run_cli("pseudoheight --input " + bad.string());
    CHECK(rb.exit_code == 2);
    CHECK(contains(rb.output, "sheaf-mode"));
    std::filesystem::remove(bad);
}

TEST_CASE("global usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("isometry apply --model quartic_branch").exit_code == 2);  // missing flags
}
