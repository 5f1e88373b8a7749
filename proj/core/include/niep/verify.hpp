#pragma once

#include <vector>

#include "niep/matrix.hpp"
#include "niep/polynomial.hpp"
#include "niep/spectra.hpp"
#include "niep/tolerance.hpp"

namespace niep {

/// A negative matrix entry found by the nonnegativity audit (1-based
/// row/column, matching the usual matrix-display convention).
struct EntryViolation {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Certification outcome. A report with every flag true is a certificate
/// that the matrix is nonnegative with the requested spectrum.
struct CertReport {
    bool charpoly_match = false;
    double max_coeff_deviation = 0.0;

    bool residual_ok = false;
    double residual_max = 0.0;

    bool nonnegative = false;
    std::vector<EntryViolation> violations;

    bool oracle_checked = false;
    bool oracle_match = false;
    double oracle_deviation = 0.0;

    [[nodiscard]] bool certified() const {
        return charpoly_match && residual_ok && nonnegative && oracle_match;
    }
};

/// Characteristic polynomial of a companion-plus-diagonal matrix, expanded
/// from the structure: with P_k(x) the product of (x - a_i) over i <= k,
///
///   f(x) = P_n(x) - b_2 P_{n-2}(x) - b_3 P_{n-3}(x) - ... - b_n.
///
/// The prefix products are accumulated once, so the expansion is O(n^2).
[[nodiscard]] RealPolynomial charpoly_structured(
    const CompanionDiagonalMatrix& m);

/// Characteristic polynomial det(xI - M) of a dense matrix via the
/// multiply/trace/shift coefficient recurrence. Serves as the independent
/// oracle for the structured expansion. Capped at n <= 64; within the cap
/// its accuracy still degrades with dimension and dynamic range, which
/// certification accounts for by measuring the recurrence's self-consistency
/// under an exact similarity.
[[nodiscard]] RealPolynomial charpoly_dense(const DenseMatrix& m);

inline constexpr int kDenseCharpolyMaxDim = 64;

/// Certifies that m realises sigma: structured characteristic polynomial
/// against the target (per-coefficient tolerance tol * max(1, |coeff|)),
/// structured against the dense oracle, normalized residuals |f(lambda)| /
/// max(1, |lambda|^n) at every target eigenvalue, and an entrywise
/// nonnegativity audit. Failures are recorded in the report, never thrown.
[[nodiscard]] CertReport certify(const CompanionDiagonalMatrix& m,
                                 const Spectrum& sigma,
                                 double tol = kDefaultTolerance);

}  // namespace niep
