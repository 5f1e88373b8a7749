#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace niep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitInternal = 3;

/// Command-line settings that override the input payload's "options" object.
struct Overrides {
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    std::optional<int> count;
    bool no_sort = false;
    bool pretty = false;
};

/// Outcome of one command: process exit code, a JSON document for stdout and
/// human-readable diagnostics for stderr.
struct CommandResult {
    int exit_code = kExitOk;
    std::string output;
    std::string diagnostics;
};

/// Input payload for check/realize/diag-range:
///   {"spectrum": [[re, im], ...],
///    "diagonal": [a1, ...],                       (optional)
///    "options": {"tolerance": t, "k_max": k, "m_max": m,
///                "seed": s, "count": c}}          (optional)
/// verify instead takes {"matrix": [[...], ...], "spectrum": [...]}.

/// Necessary-condition battery on the spectrum, plus the diagonal battery
/// when a diagonal is present. Exit 0 when every condition holds.
[[nodiscard]] CommandResult cmd_check(const std::string& input,
                                      const Overrides& overrides = {});

/// Feasibility gate and full realization. Exit 0 feasible, 1 infeasible.
/// With no_sort the diagonal is used in the given order and the result is a
/// diagnostic (exit 1 when the forced bottom row has negative entries).
[[nodiscard]] CommandResult cmd_realize(const std::string& input,
                                        const Overrides& overrides = {});

/// Admissible single-diagonal-element band. Exit 1 when the spectrum fails
/// the realisability conditions.
[[nodiscard]] CommandResult cmd_diag_range(const std::string& input,
                                           const Overrides& overrides = {});

/// Certifies a given matrix against a given spectrum. Structured matrices
/// (prescribed diagonal, unit superdiagonal, free bottom row) get the full
/// two-route certificate; anything else is checked through the dense route
/// only. Exit 0 iff certified.
[[nodiscard]] CommandResult cmd_verify(const std::string& input,
                                       const Overrides& overrides = {});

/// Runs the randomized invariant suites. Exit 0 iff every suite passes.
[[nodiscard]] CommandResult cmd_selftest(const Overrides& overrides = {});

}  // namespace niep::cli
