#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "json.hpp"
#include "niep/cli.hpp"

using namespace niep::cli;
using nlohmann::json;

namespace {

const char* kGoldenRealize =
    R"({"spectrum": [[4,0],[0,1],[0,-1],[0,1],[0,-1]], "diagonal": [2,2,0,0,0]})";

json output_of(const CommandResult& result) {
    return json::parse(result.output);
}

}  // namespace

TEST_CASE("check: golden spectrum passes") {
    const CommandResult r = cmd_check(
        R"({"spectrum": [[4,0],[0,1],[0,-1],[0,1],[0,-1]]})");
    CHECK(r.exit_code == kExitOk);
    const json out = output_of(r);
    CHECK(out.at("all_hold") == true);
    CHECK(out.at("suleimanova") == true);
    CHECK(out.at("n") == 5);
    CHECK_FALSE(out.contains("diagonal_report"));
}

TEST_CASE("check: unparseable spectra exit 2") {
    CHECK(cmd_check(R"({"spectrum": [[0,1],[0,-1]]})").exit_code ==
          kExitBadInput);
    CHECK(cmd_check("not json").exit_code == kExitBadInput);
    CHECK(cmd_check(R"({"spectrum": []})").exit_code == kExitBadInput);
    CHECK(cmd_check(R"({"spectrum": [[1,0],[2]]})").exit_code == kExitBadInput);
    CHECK(cmd_check(R"({})").exit_code == kExitBadInput);
}

TEST_CASE("check: diagonal battery failures exit 1") {
    const CommandResult r = cmd_check(
        R"({"spectrum": [[3,0],[2,0]], "diagonal": [4,2]})");
    CHECK(r.exit_code == kExitFailedCheck);
    const json out = output_of(r);
    CHECK(out.at("all_hold") == false);
    CHECK(out.at("diagonal_report").at("all_hold") == false);
    // The spectrum battery itself passes for (3, 2).
    CHECK(out.at("spectrum_report").at("all_hold") == true);

    // Same spectrum with a matching diagonal passes.
    CHECK(cmd_check(R"({"spectrum": [[3,0],[2,0]], "diagonal": [3,2]})")
              .exit_code == kExitOk);

    CHECK(cmd_check(R"({"spectrum": [[3,0],[2,0]], "diagonal": [4,2,1]})")
              .exit_code == kExitBadInput);
    CHECK(cmd_check(R"({"spectrum": [[3,0],[2,0]], "diagonal": [4,-2]})")
              .exit_code == kExitBadInput);
}

TEST_CASE("realize: golden pair") {
    const CommandResult r = cmd_realize(kGoldenRealize);
    CHECK(r.exit_code == kExitOk);
    const json out = output_of(r);
    CHECK(out.at("status") == "feasible");
    CHECK(out.at("b") == json::array({2.0, 16.0, 55.0, 50.0}));
    CHECK(out.at("matrix").at(4) ==
          json::array({50.0, 55.0, 16.0, 2.0, 0.0}));
    CHECK(out.at("permutation") == json::array({1, 2, 3, 4, 5}));
    CHECK(out.at("certificate").at("certified") == true);
}

TEST_CASE("realize: singleton and infeasible inputs") {
    const CommandResult single =
        cmd_realize(R"({"spectrum": [[3,0]], "diagonal": [3]})");
    CHECK(single.exit_code == kExitOk);
    CHECK(output_of(single).at("matrix") ==
          json::array({json::array({3.0})}));

    const CommandResult infeasible = cmd_realize(
        R"({"spectrum": [[4,0],[0,1],[0,-1],[0,1],[0,-1]], "diagonal": [4,0,0,0,0]})");
    CHECK(infeasible.exit_code == kExitFailedCheck);
    const json out = output_of(infeasible);
    CHECK(out.at("status") == "infeasible");
    CHECK(out.at("violation").at("condition") == "s2");

    CHECK(cmd_realize(R"({"spectrum": [[3,0]]})").exit_code == kExitBadInput);
    CHECK(cmd_realize(R"({"spectrum": [[3,0]], "diagonal": [1, 2]})")
              .exit_code == kExitBadInput);
}

TEST_CASE("realize: no-sort diagnostic reproduces the ascending failure") {
    Overrides overrides;
    overrides.no_sort = true;
    const CommandResult r = cmd_realize(
        R"({"spectrum": [[4,0],[0,1],[0,-1],[0,1],[0,-1]], "diagonal": [0,0,0,2,2]})",
        overrides);
    CHECK(r.exit_code == kExitFailedCheck);
    const json out = output_of(r);
    CHECK(out.at("status") == "diagnostic");
    CHECK(out.at("mode") == "no-sort");
    CHECK(out.at("nonnegative") == false);
    CHECK(out.at("b") == json::array({2.0, 8.0, -1.0, 4.0}));
    REQUIRE(out.at("negative_entries").size() == 1);
    CHECK(out.at("negative_entries").at(0).at("j") == 4);
    CHECK(out.at("negative_entries").at(0).at("value") == -1.0);
    CHECK(out.at("matrix").at(4) == json::array({4.0, -1.0, 8.0, 2.0, 2.0}));
    CHECK(r.diagnostics.find("negative entry b_4 = -1") != std::string::npos);
    CHECK_FALSE(out.contains("certificate"));

    // Descending order through the same path stays nonnegative: exit 0,
    // still marked diagnostic.
    const CommandResult sorted = cmd_realize(kGoldenRealize, overrides);
    CHECK(sorted.exit_code == kExitOk);
    CHECK(output_of(sorted).at("nonnegative") == true);
}

TEST_CASE("diag-range: golden spectrum band") {
    const CommandResult r = cmd_diag_range(
        R"({"spectrum": [[4,0],[0,1],[0,-1],[0,1],[0,-1]]})");
    CHECK(r.exit_code == kExitOk);
    const json out = output_of(r);
    CHECK(out.at("a_min").get<double>() == doctest::Approx(0.0));
    CHECK(out.at("a_max").get<double>() ==
          doctest::Approx((4.0 + std::sqrt(176.0)) / 5.0).epsilon(1e-12));
    CHECK(out.at("witness_example").size() == 5);
}

TEST_CASE("diag-range: equality and failure cases") {
    const double c = std::cos(2.0 * M_PI / 3.0);
    const double s = std::sin(2.0 * M_PI / 3.0);
    json payload{{"spectrum", json::array({json::array({1.0, 0.0}),
                                           json::array({c, s}),
                                           json::array({c, -s})})}};
    const CommandResult equality = cmd_diag_range(payload.dump());
    CHECK(equality.exit_code == kExitOk);
    const json out = output_of(equality);
    CHECK(std::abs(out.at("a_min").get<double>()) <= 1e-9);
    CHECK(std::abs(out.at("a_max").get<double>()) <= 1e-9);

    const CommandResult negative =
        cmd_diag_range(R"({"spectrum": [[1,0],[-5,0]]})");
    CHECK(negative.exit_code == kExitFailedCheck);
    CHECK(output_of(negative).at("error").at("type") == "not-realisable");

    const CommandResult outside =
        cmd_diag_range(R"({"spectrum": [[7,0],[2,0],[1,0]]})");
    CHECK(outside.exit_code == kExitFailedCheck);
    CHECK(output_of(outside).at("status") == "not-applicable");
}

TEST_CASE("verify: structured matrices get the full certificate") {
    const char* payload = R"({
      "matrix": [[2,1,0,0,0],[0,2,1,0,0],[0,0,0,1,0],[0,0,0,0,1],[50,55,16,2,0]],
      "spectrum": [[4,0],[0,1],[0,-1],[0,1],[0,-1]]})";
    const CommandResult r = cmd_verify(payload);
    CHECK(r.exit_code == kExitOk);
    const json out = output_of(r);
    CHECK(out.at("structured") == true);
    CHECK(out.at("certificate").at("certified") == true);
    CHECK(out.at("certificate").at("oracle_checked") == true);

    const char* example_3x3 = R"({
      "matrix": [[6,1,0],[0,4,1],[20,1,0]],
      "spectrum": [[7,0],[2,0],[1,0]]})";
    CHECK(cmd_verify(example_3x3).exit_code == kExitOk);

    const char* tampered = R"({
      "matrix": [[2,1,0,0,0],[0,2,1,0,0],[0,0,0,1,0],[0,0,0,0,1],[50,55,15,2,0]],
      "spectrum": [[4,0],[0,1],[0,-1],[0,1],[0,-1]]})";
    const CommandResult bad = cmd_verify(tampered);
    CHECK(bad.exit_code == kExitFailedCheck);
    CHECK(output_of(bad).at("certificate").at("charpoly_match") == false);
}

TEST_CASE("verify: dense route for unstructured matrices") {
    // Eigenvalues of [[1,2],[3,4]] are (5 +- sqrt(33)) / 2.
    const double root = std::sqrt(33.0);
    json payload{
        {"matrix", json::array({json::array({1.0, 2.0}),
                                json::array({3.0, 4.0})})},
        {"spectrum",
         json::array({json::array({(5.0 + root) / 2.0, 0.0}),
                      json::array({(5.0 - root) / 2.0, 0.0})})}};
    const CommandResult r = cmd_verify(payload.dump());
    CHECK(r.exit_code == kExitOk);
    const json out = output_of(r);
    CHECK(out.at("structured") == false);
    CHECK(out.at("certificate").at("oracle_checked") == false);
    CHECK(out.at("certificate").at("certified") == true);

    CHECK(cmd_verify(R"({"matrix": [[1,2,3],[4,5,6]], "spectrum": [[1,0]]})")
              .exit_code == kExitBadInput);
    CHECK(cmd_verify(R"({"matrix": [[1]], "spectrum": [[1,0],[2,0]]})")
              .exit_code == kExitBadInput);
}

TEST_CASE("verify: emitted realizations certify against their spectrum") {
    const CommandResult realized = cmd_realize(kGoldenRealize);
    REQUIRE(realized.exit_code == kExitOk);
    json payload{{"matrix", output_of(realized).at("matrix")},
                 {"spectrum", json::parse(kGoldenRealize).at("spectrum")}};
    CHECK(cmd_verify(payload.dump()).exit_code == kExitOk);
}

TEST_CASE("selftest command") {
    Overrides small;
    small.count = 10;
    small.seed = 9;
    const CommandResult r = cmd_selftest(small);
    CHECK(r.exit_code == kExitOk);
    const json out = output_of(r);
    CHECK(out.at("passed") == true);
    CHECK(out.at("count") == 10);
    CHECK(out.at("seed") == 9);
    CHECK(out.at("suites").size() == 11);
    CHECK(r.diagnostics.find("suite ") != std::string::npos);

    Overrides vacuous;
    vacuous.count = 0;
    vacuous.seed = 42;
    const CommandResult empty = cmd_selftest(vacuous);
    CHECK(empty.exit_code == kExitOk);
    const json empty_out = output_of(empty);
    for (const auto& suite : empty_out.at("suites")) {
        CHECK(suite.at("cases") == 0);
        CHECK(suite.at("failures") == 0);
    }
}

TEST_CASE("envelope options are honored and overridable") {
    // Battery depth from the payload: k_max=2, m_max=1 gives
    // 2 structural + 2 power sums + 2 moment records.
    const CommandResult r = cmd_check(
        R"({"spectrum": [[3,0],[2,0]], "options": {"k_max": 2, "m_max": 1}})");
    CHECK(r.exit_code == kExitOk);
    CHECK(output_of(r).at("spectrum_report").at("conditions").size() == 6);

    // A loose tolerance from the payload lets a slightly-off trace pass.
    const CommandResult loose = cmd_check(
        R"({"spectrum": [[3,0],[2,0]], "diagonal": [3.0, 2.0001],
            "options": {"tolerance": 1e-2}})");
    CHECK(loose.exit_code == kExitOk);

    // The command-line override wins over the payload.
    Overrides strict;
    strict.tolerance = 1e-9;
    const CommandResult tight = cmd_check(
        R"({"spectrum": [[3,0],[2,0]], "diagonal": [3.0, 2.0001],
            "options": {"tolerance": 1e-2}})",
        strict);
    CHECK(tight.exit_code == kExitFailedCheck);

    CHECK(cmd_check(R"({"spectrum": [[3,0]], "options": {"tolerance": -1}})")
              .exit_code == kExitBadInput);
}

TEST_CASE("pretty flag changes formatting only") {
    Overrides pretty;
    pretty.pretty = true;
    const CommandResult r = cmd_realize(kGoldenRealize, pretty);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.output.find('\n') != std::string::npos);
    CHECK(output_of(r).at("status") == "feasible");
}
