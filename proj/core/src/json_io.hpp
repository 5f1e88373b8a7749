#pragma once

#include <complex>
#include <vector>

#include "json.hpp"
#include "niep/matrix.hpp"
#include "niep/realize.hpp"
#include "niep/selftest.hpp"
#include "niep/spectra.hpp"
#include "niep/verify.hpp"

namespace niep::io {

using nlohmann::json;

/// Spectrum entries encode as two-element [re, im] arrays.
[[nodiscard]] std::vector<std::complex<double>> spectrum_values_from_json(
    const json& j);

/// Diagonals encode as arrays of bare numbers.
[[nodiscard]] std::vector<double> diagonal_from_json(const json& j);

/// Matrices encode as row-major arrays of arrays of numbers.
[[nodiscard]] DenseMatrix matrix_from_json(const json& j);
[[nodiscard]] json matrix_to_json(const DenseMatrix& m);

[[nodiscard]] json necessary_report_to_json(const NecessaryReport& report);
[[nodiscard]] json cert_report_to_json(const CertReport& report);
[[nodiscard]] json violation_to_json(const GateViolation& violation);
[[nodiscard]] json summary_to_json(const selftest::Summary& summary);

}  // namespace niep::io
