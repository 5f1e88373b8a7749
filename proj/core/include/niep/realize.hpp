#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/spectra.hpp"
#include "niep/symfunc.hpp"
#include "niep/tolerance.hpp"
#include "niep/verify.hpp"

namespace niep {

/// A named feasibility failure with the margin by which it failed and a
/// human-readable explanation.
struct GateViolation {
    std::string condition;  // "suleimanova", "s1" or "s2"
    double margin = 0.0;
    std::string detail;
};

/// Outcome of the feasibility gate: the trace condition s_1(delta) =
/// s_1(sigma), the second-moment condition s_2(delta) <= s_2(sigma), and the
/// class requirement that every non-Perron entry has nonpositive real part.
struct GateResult {
    bool pass = false;
    double suleimanova_margin = 0.0;  // -max Re over non-Perron entries
    double s1_margin = 0.0;           // -|s1(delta) - s1(sigma)|
    double s2_margin = 0.0;           // s2(sigma) - s2(delta)
    std::optional<GateViolation> violation;
};

[[nodiscard]] GateResult gate(const Spectrum& sigma, const DiagonalList& delta,
                              double tol = kDefaultTolerance);

/// b_2 from the power sums alone: (s_2(sigma) - s_2(delta)) / 2. Requires
/// the trace condition.
[[nodiscard]] double b2_direct(const Spectrum& sigma,
                               const DiagonalList& delta,
                               double tol = kDefaultTolerance);

/// Table of the degree slices of the bottom-row entries: K(i, j) collects
/// the terms of b_j of total degree i in the diagonal entries, so that
/// b_j = sum over i of K(i, j). Columns j = 0 and 1 are kept too (they are
/// the coefficients of the trivially-determined entries and feed the
/// degree-slice recurrence); the lookup is total, returning 0 outside
/// 0 <= i <= j <= n.
class KTable {
public:
    KTable(int n, std::vector<std::vector<double>> k);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] double k(int i, int j) const;

private:
    int n_;
    std::vector<std::vector<double>> k_;  // [j][i], 0 <= i <= j
};

struct ClosedFormSolution {
    std::vector<double> b;  // b_2..b_n
    KTable ktable;
};

/// Closed-form bottom row: b_j as the sum of its degree slices, each built
/// from the homogeneous symmetric functions of the diagonal and the target
/// coefficients c_i. Requires the trace condition (so that rho = c_1 + s_1
/// of the diagonal).
[[nodiscard]] ClosedFormSolution solve_b_closed(
    const Spectrum& sigma, const DiagonalList& delta,
    double tol = kDefaultTolerance);

/// Independent route to the same bottom row: coefficient matching of the
/// structured characteristic polynomial against the target, solved forward
/// as a recurrence in the elementary symmetric functions of the truncated
/// diagonal lists.
[[nodiscard]] std::vector<double> solve_b_recurrence(
    const Spectrum& sigma, const DiagonalList& delta,
    double tol = kDefaultTolerance);

/// Assembles the structured matrix from a diagonal and bottom-row entries
/// b_2..b_n. No ordering or sign checks: this is the raw constructor used
/// both by realization and by deliberately non-nonnegative diagnostics.
[[nodiscard]] CompanionDiagonalMatrix assemble(const DiagonalList& delta,
                                               const std::vector<double>& b);

struct RealizeResult {
    bool feasible = false;
    std::optional<CompanionDiagonalMatrix> matrix;
    std::vector<double> b;  // b_2..b_n when feasible
    std::optional<GateViolation> violation;
    std::optional<CertReport> certificate;
    /// 1-based positions: sorted_diagonal[i] = input_diagonal[permutation[i]].
    std::vector<int> permutation;
};

/// Full realization pipeline: sorts the diagonal into nonincreasing order,
/// runs the gate, solves the bottom row by the closed form, cross-checks it
/// against the recurrence route, clamps roundoff negatives, assembles the
/// matrix and certifies it. A passing gate guarantees a nonnegative bottom
/// row; a negative entry beyond tolerance after a passing gate (or a failed
/// certification) throws InternalContradiction rather than returning an
/// uncertified matrix.
[[nodiscard]] RealizeResult realize(const Spectrum& sigma,
                                    const DiagonalList& delta,
                                    double tol = kDefaultTolerance);

/// 2x2 case: (lambda1, lambda2) with diagonal (a1, a2) works iff
/// a1 <= lambda1 and a1 + a2 = lambda1 + lambda2; the realizing matrix is
/// [[a1, 1], [b2, a2]] with b2 = a1 a2 - lambda1 lambda2.
[[nodiscard]] RealizeResult realize_2x2(double lambda1, double lambda2,
                                        double a1, double a2,
                                        double tol = kDefaultTolerance);

/// 3x3 case with a real spectrum lambda1 >= lambda2 >= lambda3. Conditions:
/// lambda2 <= a1 <= lambda1, trace equality, second-moment inequality.
/// Unlike the general pipeline this admits spectra with positive non-Perron
/// entries.
[[nodiscard]] RealizeResult realize_3x3_real(
    const std::array<double, 3>& lambdas, const std::array<double, 3>& delta,
    double tol = kDefaultTolerance);

/// 3x3 case with spectrum (rho, alpha + i beta, alpha - i beta). Conditions:
/// a1 <= rho, trace equality, second-moment inequality.
[[nodiscard]] RealizeResult realize_3x3_complex(
    double rho, double alpha, double beta, const std::array<double, 3>& delta,
    double tol = kDefaultTolerance);

/// The band of admissible single diagonal elements for a realisable
/// spectrum, with the witness diagonal construction (one entry a, the rest
/// equal shares of the remaining trace).
class RangeResult {
public:
    RangeResult(double a_min, double a_max, double s1, int n);

    [[nodiscard]] double a_min() const { return a_min_; }
    [[nodiscard]] double a_max() const { return a_max_; }

    /// Witness diagonal for a given element a: (a, (s1-a)/(n-1), ...),
    /// sorted nonincreasing. Throws InvalidInput when a lies far enough
    /// outside [0, s1] that the witness has negative entries.
    [[nodiscard]] DiagonalList witness(double a) const;

private:
    double a_min_;
    double a_max_;
    double s1_;
    int n_;
};

/// Computes [a_min, a_max] such that sigma (Suleimanova type, realisable)
/// is the spectrum of a nonnegative matrix with diagonal element a iff
/// a_min <= a <= a_max. Throws NotRealisable when the spectrum fails the
/// realisability conditions (nonnegative trace, trace-squared at most
/// n times the second moment), and PreconditionViolated outside the class.
[[nodiscard]] RangeResult diag_range(const Spectrum& sigma,
                                     double tol = kDefaultTolerance);

/// Binomially normalized mixed coefficients Q_0..Q_{n+1} of (x - r) times
/// the polynomial with coefficients e_k(xs):
///
///   Q_{2k}   = (e_{2k}(xs)   - r e_{2k-1}(xs)) / C(ceil(n/2), k)
///   Q_{2k+1} = (e_{2k+1}(xs) - r e_{2k}(xs))   / C(floor(n/2), k)
///
/// xs must be self-conjugate with nonnegative real parts; the e_k are
/// evaluated in complex arithmetic and must come out real.
[[nodiscard]] std::vector<double> q_values(
    double r, const std::vector<std::complex<double>>& xs,
    double tol = kDefaultTolerance);

}  // namespace niep
