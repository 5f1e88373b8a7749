#include "json_io.hpp"

#include "niep/errors.hpp"

namespace niep::io {

std::vector<std::complex<double>> spectrum_values_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("spectrum must be a nonempty array");
    }
    std::vector<std::complex<double>> values;
    values.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number() || !entry[1].is_number()) {
            throw InvalidInput(
                "spectrum entries must be two-element [re, im] arrays");
        }
        values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return values;
}

std::vector<double> diagonal_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("diagonal must be a nonempty array of numbers");
    }
    std::vector<double> values;
    values.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_number()) {
            throw InvalidInput("diagonal entries must be numbers");
        }
        values.push_back(entry.get<double>());
    }
    return values;
}

DenseMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("matrix must be a nonempty array of rows");
    }
    const int n = static_cast<int>(j.size());
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw InvalidInput("matrix must be square");
        }
        for (int c = 0; c < n; ++c) {
            const auto& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_number()) {
                throw InvalidInput("matrix entries must be numbers");
            }
            m.at(i, c) = cell.get<double>();
        }
    }
    return m;
}

json matrix_to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json necessary_report_to_json(const NecessaryReport& report) {
    json conditions = json::array();
    for (const auto& record : report.conditions) {
        conditions.push_back({{"id", record.id},
                              {"holds", record.holds},
                              {"witness", record.witness},
                              {"margin", record.margin}});
    }
    return {{"conditions", std::move(conditions)},
            {"all_hold", report.all_hold()},
            {"worst_margin", report.worst_margin()}};
}

json cert_report_to_json(const CertReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(
            {{"row", v.row}, {"col", v.col}, {"value", v.value}});
    }
    return {{"charpoly_match", report.charpoly_match},
            {"max_coeff_deviation", report.max_coeff_deviation},
            {"residual_ok", report.residual_ok},
            {"residual_max", report.residual_max},
            {"nonnegative", report.nonnegative},
            {"violations", std::move(violations)},
            {"oracle_checked", report.oracle_checked},
            {"oracle_match", report.oracle_match},
            {"oracle_deviation", report.oracle_deviation},
            {"certified", report.certified()}};
}

json violation_to_json(const GateViolation& violation) {
    return {{"condition", violation.condition},
            {"margin", violation.margin},
            {"detail", violation.detail}};
}

json summary_to_json(const selftest::Summary& summary) {
    json suites = json::array();
    for (const auto& suite : summary.suites) {
        suites.push_back({{"name", suite.name},
                          {"cases", suite.cases},
                          {"failures", suite.failures},
                          {"worst_margin", suite.worst_margin},
                          {"metric", suite.note}});
    }
    return {{"suites", std::move(suites)}, {"passed", summary.passed()}};
}

}  // namespace niep::io
