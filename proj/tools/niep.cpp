// Command-line front end: decide whether a self-conjugate spectrum with
// nonpositive-real-part tail is realisable by a nonnegative matrix with
// prescribed diagonal, construct the realizing companion-plus-diagonal
// matrix, and certify it. Input is JSON on stdin or a file; results are JSON
// on stdout, diagnostics on stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "niep/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int emit(const niep::cli::CommandResult& result) {
    std::cout << result.output;
    if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spectra with prescribed diagonal: feasibility checks, structured "
        "realizations and certificates"};
    app.require_subcommand(1);

    std::string input_path = "-";
    double tolerance = 0.0;
    bool tolerance_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int count = 0;
    bool count_set = false;
    bool no_sort = false;
    bool pretty = false;
    bool json_flag = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("--input", input_path,
                            "Input file, or - for stdin (default)");
        }
        cmd->add_option("--tolerance", tolerance, "Comparison tolerance")
            ->each([&](const std::string&) { tolerance_set = true; });
        cmd->add_flag("--json", json_flag, "Compact JSON output (default)");
        cmd->add_flag("--pretty", pretty, "Indented JSON output");
    };

    CLI::App* check = app.add_subcommand(
        "check", "Run the necessary-condition batteries");
    add_common(check, true);

    CLI::App* realize = app.add_subcommand(
        "realize", "Decide feasibility and build a certified matrix");
    add_common(realize, true);
    realize->add_flag(
        "--no-sort", no_sort,
        "Keep the diagonal order as given (diagnostic mode, no certificate)");

    CLI::App* diag_range = app.add_subcommand(
        "diag-range", "Admissible range of a single diagonal element");
    add_common(diag_range, true);

    CLI::App* verify = app.add_subcommand(
        "verify", "Certify a given matrix against a given spectrum");
    add_common(verify, true);

    CLI::App* selftest = app.add_subcommand(
        "selftest", "Run the randomized invariant suites");
    add_common(selftest, false);
    selftest->add_option("--seed", seed, "Random seed")
        ->each([&](const std::string&) { seed_set = true; });
    selftest->add_option("--count", count, "Cases per suite")
        ->each([&](const std::string&) { count_set = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : niep::cli::kExitBadInput;
    }

    niep::cli::Overrides overrides;
    if (tolerance_set) overrides.tolerance = tolerance;
    if (seed_set) overrides.seed = seed;
    if (count_set) overrides.count = count;
    overrides.no_sort = no_sort;
    overrides.pretty = pretty;

    try {
        if (selftest->parsed()) {
            return emit(niep::cli::cmd_selftest(overrides));
        }
        const std::string input = read_input(input_path);
        if (check->parsed()) {
            return emit(niep::cli::cmd_check(input, overrides));
        }
        if (realize->parsed()) {
            return emit(niep::cli::cmd_realize(input, overrides));
        }
        if (diag_range->parsed()) {
            return emit(niep::cli::cmd_diag_range(input, overrides));
        }
        if (verify->parsed()) {
            return emit(niep::cli::cmd_verify(input, overrides));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return niep::cli::kExitBadInput;
    }
    return niep::cli::kExitBadInput;
}
