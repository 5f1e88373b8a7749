#include "niep/cli.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "json_io.hpp"
#include "niep/errors.hpp"
#include "niep/realize.hpp"
#include "niep/selftest.hpp"
#include "niep/spectra.hpp"
#include "niep/tolerance.hpp"
#include "niep/verify.hpp"

namespace niep::cli {

namespace {

using io::json;

struct Effective {
    double tolerance = kDefaultTolerance;
    int k_max = 6;
    int m_max = 3;
    std::uint64_t seed = 1;
    int count = 200;
};

Effective resolve_options(const json& payload, const Overrides& overrides) {
    Effective eff;
    if (payload.is_object() && payload.contains("options")) {
        const json& opts = payload.at("options");
        if (!opts.is_object()) {
            throw InvalidInput("options must be an object");
        }
        if (opts.contains("tolerance")) eff.tolerance = opts.at("tolerance").get<double>();
        if (opts.contains("k_max")) eff.k_max = opts.at("k_max").get<int>();
        if (opts.contains("m_max")) eff.m_max = opts.at("m_max").get<int>();
        if (opts.contains("seed")) eff.seed = opts.at("seed").get<std::uint64_t>();
        if (opts.contains("count")) eff.count = opts.at("count").get<int>();
    }
    if (overrides.tolerance) eff.tolerance = *overrides.tolerance;
    if (overrides.seed) eff.seed = *overrides.seed;
    if (overrides.count) eff.count = *overrides.count;
    if (!(eff.tolerance > 0.0) || !std::isfinite(eff.tolerance)) {
        throw InvalidInput("tolerance must be a positive finite number");
    }
    if (eff.count < 0) throw InvalidInput("count must be nonnegative");
    return eff;
}

std::string render(const json& j, const Overrides& overrides) {
    return overrides.pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

json parse_payload(const std::string& input) {
    try {
        return json::parse(input);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("input is not valid JSON: ") + e.what());
    }
}

Spectrum spectrum_from_payload(const json& payload) {
    if (!payload.is_object() || !payload.contains("spectrum")) {
        throw InvalidInput("payload must contain a \"spectrum\" array");
    }
    return parse_spectrum(io::spectrum_values_from_json(payload.at("spectrum")));
}

CommandResult guarded(const Overrides& overrides,
                      const std::function<CommandResult()>& body) {
    auto error_result = [&](int code, const char* type, const std::string& what) {
        CommandResult r;
        r.exit_code = code;
        r.output = render(json{{"error", {{"type", type}, {"message", what}}}},
                          overrides);
        r.diagnostics = std::string(type) + ": " + what + "\n";
        return r;
    };
    try {
        return body();
    } catch (const NotRealisable& e) {
        return error_result(kExitFailedCheck, "not-realisable", e.what());
    } catch (const InvalidInput& e) {
        return error_result(kExitBadInput, "invalid-input", e.what());
    } catch (const NonRealResult& e) {
        return error_result(kExitBadInput, "non-real-result", e.what());
    } catch (const PreconditionViolated& e) {
        return error_result(kExitBadInput, "precondition-violated", e.what());
    } catch (const InternalContradiction& e) {
        return error_result(kExitInternal, "internal-contradiction", e.what());
    } catch (const std::exception& e) {
        return error_result(kExitInternal, "internal-error", e.what());
    }
}

}  // namespace

CommandResult cmd_check(const std::string& input, const Overrides& overrides) {
    return guarded(overrides, [&]() {
        const json payload = parse_payload(input);
        const Effective eff = resolve_options(payload, overrides);
        const Spectrum sigma = spectrum_from_payload(payload);

        const NecessaryReport spectrum_report =
            check_necessary(sigma, eff.k_max, eff.m_max, eff.tolerance);
        bool all_hold = spectrum_report.all_hold();

        json out{{"command", "check"},
                 {"n", sigma.n()},
                 {"suleimanova", is_suleimanova(sigma, eff.tolerance)},
                 {"spectrum_report", io::necessary_report_to_json(spectrum_report)}};

        if (payload.contains("diagonal")) {
            const DiagonalList delta(
                io::diagonal_from_json(payload.at("diagonal")), eff.tolerance);
            if (static_cast<int>(delta.n()) != sigma.n()) {
                throw DimensionMismatch(
                    "diagonal length must equal the spectrum length");
            }
            const NecessaryReport diag_report =
                check_diag_necessary(sigma, delta, 4, eff.tolerance);
            all_hold = all_hold && diag_report.all_hold();
            out["diagonal_report"] = io::necessary_report_to_json(diag_report);
        }
        out["all_hold"] = all_hold;

        CommandResult r;
        r.exit_code = all_hold ? kExitOk : kExitFailedCheck;
        r.output = render(out, overrides);
        return r;
    });
}

namespace {

CommandResult realize_no_sort(const Spectrum& sigma, const DiagonalList& delta,
                              const Effective& eff, const Overrides& overrides) {
    CommandResult r;
    const GateResult g = gate(sigma, delta, eff.tolerance);
    if (!g.pass) {
        r.exit_code = kExitFailedCheck;
        r.output = render(json{{"command", "realize"},
                               {"mode", "no-sort"},
                               {"status", "infeasible"},
                               {"violation", io::violation_to_json(*g.violation)}},
                          overrides);
        r.diagnostics = g.violation->detail + "\n";
        return r;
    }

    auto closed = solve_b_closed(sigma, delta, eff.tolerance);
    const auto recurrence = solve_b_recurrence(sigma, delta, eff.tolerance);
    for (std::size_t i = 0; i < closed.b.size(); ++i) {
        if (!near(closed.b[i], recurrence[i], eff.tolerance)) {
            throw InternalContradiction("b solvers disagree");
        }
    }

    double b_scale = 1.0;
    for (double v : closed.b) b_scale = std::max(b_scale, std::abs(v));
    json negatives = json::array();
    std::ostringstream diag;
    for (std::size_t i = 0; i < closed.b.size(); ++i) {
        if (closed.b[i] < -scaled_tol(eff.tolerance, b_scale)) {
            const int j = static_cast<int>(i) + 2;
            negatives.push_back({{"j", j}, {"value", closed.b[i]}});
            diag << "negative entry b_" << j << " = " << closed.b[i] << "\n";
        }
    }

    const CompanionDiagonalMatrix matrix = assemble(delta, closed.b);
    const bool nonnegative = negatives.empty();
    // Diagnostic output only: the structured form with this ordering is not
    // a certificate even when it happens to be nonnegative.
    r.exit_code = nonnegative ? kExitOk : kExitFailedCheck;
    r.output = render(json{{"command", "realize"},
                           {"mode", "no-sort"},
                           {"status", "diagnostic"},
                           {"b", closed.b},
                           {"matrix", io::matrix_to_json(matrix.dense())},
                           {"nonnegative", nonnegative},
                           {"negative_entries", std::move(negatives)}},
                      overrides);
    r.diagnostics = diag.str();
    return r;
}

}  // namespace

CommandResult cmd_realize(const std::string& input,
                          const Overrides& overrides) {
    return guarded(overrides, [&]() {
        const json payload = parse_payload(input);
        const Effective eff = resolve_options(payload, overrides);
        const Spectrum sigma = spectrum_from_payload(payload);
        if (!payload.contains("diagonal")) {
            throw InvalidInput("realize requires a \"diagonal\" array");
        }
        const DiagonalList delta(io::diagonal_from_json(payload.at("diagonal")),
                                 eff.tolerance);
        if (static_cast<int>(delta.n()) != sigma.n()) {
            throw DimensionMismatch(
                "diagonal length must equal the spectrum length");
        }

        if (overrides.no_sort) {
            return realize_no_sort(sigma, delta, eff, overrides);
        }

        const RealizeResult result = realize(sigma, delta, eff.tolerance);
        CommandResult r;
        if (!result.feasible) {
            r.exit_code = kExitFailedCheck;
            r.output = render(
                json{{"command", "realize"},
                     {"status", "infeasible"},
                     {"violation", io::violation_to_json(*result.violation)}},
                overrides);
            r.diagnostics = result.violation->detail + "\n";
            return r;
        }
        r.exit_code = kExitOk;
        r.output = render(
            json{{"command", "realize"},
                 {"status", "feasible"},
                 {"matrix", io::matrix_to_json(result.matrix->dense())},
                 {"b", result.b},
                 {"permutation", result.permutation},
                 {"certificate", io::cert_report_to_json(*result.certificate)}},
            overrides);
        return r;
    });
}

CommandResult cmd_diag_range(const std::string& input,
                             const Overrides& overrides) {
    return guarded(overrides, [&]() {
        const json payload = parse_payload(input);
        const Effective eff = resolve_options(payload, overrides);
        const Spectrum sigma = spectrum_from_payload(payload);

        CommandResult r;
        try {
            const RangeResult range = diag_range(sigma, eff.tolerance);
            const DiagonalList witness = range.witness(range.a_max());
            r.exit_code = kExitOk;
            r.output = render(json{{"command", "diag-range"},
                                   {"a_min", range.a_min()},
                                   {"a_max", range.a_max()},
                                   {"witness_example", witness.entries()}},
                              overrides);
        } catch (const PreconditionViolated& e) {
            // Outside the nonpositive-real-part class: the band formula does
            // not apply. Reported as a failed check, not as bad input.
            r.exit_code = kExitFailedCheck;
            r.output = render(json{{"command", "diag-range"},
                                   {"status", "not-applicable"},
                                   {"reason", e.what()}},
                              overrides);
            r.diagnostics = std::string(e.what()) + "\n";
        }
        return r;
    });
}

CommandResult cmd_verify(const std::string& input, const Overrides& overrides) {
    return guarded(overrides, [&]() {
        const json payload = parse_payload(input);
        const Effective eff = resolve_options(payload, overrides);
        if (!payload.is_object() || !payload.contains("matrix")) {
            throw InvalidInput("verify requires a \"matrix\" array of rows");
        }
        const DenseMatrix m = io::matrix_from_json(payload.at("matrix"));
        const Spectrum sigma = spectrum_from_payload(payload);
        if (m.n != sigma.n()) {
            throw DimensionMismatch(
                "matrix dimension must equal the spectrum length");
        }

        // Structured-form validation: diagonal + unit superdiagonal + free
        // bottom row, zero elsewhere.
        double max_abs = 0.0;
        for (double v : m.data) max_abs = std::max(max_abs, std::abs(v));
        const double stol = scaled_tol(1e-12, max_abs);
        bool structured = true;
        for (int i = 0; i < m.n && structured; ++i) {
            for (int j = 0; j < m.n && structured; ++j) {
                if (i == m.n - 1 || i == j) continue;
                if (j == i + 1) {
                    if (std::abs(m.at(i, j) - 1.0) > stol) structured = false;
                } else if (std::abs(m.at(i, j)) > stol) {
                    structured = false;
                }
            }
        }
        if (m.n == 1) structured = true;

        CertReport report;
        if (structured) {
            std::vector<double> diag(static_cast<std::size_t>(m.n));
            for (int i = 0; i < m.n; ++i) diag[static_cast<std::size_t>(i)] = m.at(i, i);
            std::vector<double> b(static_cast<std::size_t>(m.n) - 1);
            for (int j = 0; j + 1 < m.n; ++j) {
                b[static_cast<std::size_t>(m.n - j) - 2] = m.at(m.n - 1, j);
            }
            report = certify(CompanionDiagonalMatrix(diag, b), sigma,
                             eff.tolerance);
        } else {
            // Dense route only.
            const RealPolynomial f = charpoly_dense(m);
            const RealPolynomial target = target_poly(sigma).full;
            report.oracle_checked = false;
            report.oracle_match = true;
            report.charpoly_match = true;
            for (int k = 0; k <= m.n; ++k) {
                const double dev = std::abs(f.c(k) - target.c(k));
                report.max_coeff_deviation =
                    std::max(report.max_coeff_deviation, dev);
                if (dev > scaled_tol(eff.tolerance, target.c(k))) {
                    report.charpoly_match = false;
                }
            }
            for (const auto& lambda : sigma.all()) {
                double pow_n = 1.0;
                for (int i = 0; i < m.n; ++i) pow_n *= std::abs(lambda);
                report.residual_max =
                    std::max(report.residual_max,
                             std::abs(f.eval(lambda)) / std::max(1.0, pow_n));
            }
            report.residual_ok = report.residual_max <= eff.tolerance;
            report.nonnegative = true;
            for (int i = 0; i < m.n; ++i) {
                for (int j = 0; j < m.n; ++j) {
                    if (m.at(i, j) < -eff.tolerance) {
                        report.nonnegative = false;
                        report.violations.push_back({i + 1, j + 1, m.at(i, j)});
                    }
                }
            }
        }

        CommandResult r;
        r.exit_code = report.certified() ? kExitOk : kExitFailedCheck;
        json out{{"command", "verify"},
                 {"structured", structured},
                 {"certificate", io::cert_report_to_json(report)}};
        r.output = render(out, overrides);
        return r;
    });
}

CommandResult cmd_selftest(const Overrides& overrides) {
    return guarded(overrides, [&]() {
        Effective eff = resolve_options(json::object(), overrides);
        const selftest::Summary summary =
            selftest::run_all(eff.seed, eff.count);

        std::ostringstream diag;
        for (const auto& suite : summary.suites) {
            diag << "suite " << suite.name;
            for (std::size_t pad = suite.name.size(); pad < 36; ++pad)
                diag << ' ';
            diag << " cases=" << suite.cases << " failures=" << suite.failures
                 << " worst=" << suite.worst_margin << " (" << suite.note
                 << ")\n";
        }

        CommandResult r;
        r.exit_code = summary.passed() ? kExitOk : kExitFailedCheck;
        json out = io::summary_to_json(summary);
        out["command"] = "selftest";
        out["seed"] = eff.seed;
        out["count"] = eff.count;
        r.output = render(out, overrides);
        r.diagnostics = diag.str();
        return r;
    });
}

}  // namespace niep::cli
