#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "niep/polynomial.hpp"
#include "niep/tolerance.hpp"

namespace niep {

/// A candidate spectrum: a nonnegative Perron entry rho plus the remaining
/// eigenvalues, held in exactly self-conjugate form (construction averages
/// matched conjugate pairs, so downstream real arithmetic is exact).
class Spectrum {
public:
    Spectrum(double rho, std::vector<std::complex<double>> rest,
             double tol = kPairTolerance);

    [[nodiscard]] double rho() const { return rho_; }
    [[nodiscard]] const std::vector<std::complex<double>>& rest() const {
        return rest_;
    }
    [[nodiscard]] int n() const { return static_cast<int>(rest_.size()) + 1; }

    /// All n entries, rho first.
    [[nodiscard]] std::vector<std::complex<double>> all() const;

    /// Power sum s_k over all entries, k >= 1. Real by self-conjugacy.
    [[nodiscard]] double s(int k) const;

private:
    double rho_ = 0.0;
    std::vector<std::complex<double>> rest_;
};

/// Builds a Spectrum from an undifferentiated list of complex values.
/// The Perron entry is the largest real nonnegative entry within tol (for a
/// realisable list this is a maximal-modulus entry; dominance over the other
/// moduli is reported by check_necessary rather than enforced here). Ties
/// break toward the earliest input position. The remaining entries are
/// greedily matched into conjugate pairs within tol and symmetrized.
/// Throws NoPerron or NotSelfConjugate.
[[nodiscard]] Spectrum parse_spectrum(
    const std::vector<std::complex<double>>& values,
    double tol = kPairTolerance);

/// True iff every non-Perron entry has real part <= tol.
[[nodiscard]] bool is_suleimanova(const Spectrum& sigma,
                                  double tol = kDefaultTolerance);

/// Prescribed diagonal entries: finite nonnegative reals. Entries within
/// tolerance of zero are clamped to exactly 0; entries below -tol are
/// rejected. Ordering is preserved as given (realization sorts separately,
/// so deliberately unsorted lists remain expressible).
class DiagonalList {
public:
    explicit DiagonalList(std::vector<double> entries,
                          double tol = kDefaultTolerance);

    [[nodiscard]] std::size_t n() const { return entries_.size(); }
    [[nodiscard]] const std::vector<double>& entries() const {
        return entries_;
    }
    [[nodiscard]] double operator[](std::size_t i) const {
        return entries_[i];
    }

    [[nodiscard]] bool is_nonincreasing() const;

    /// Nonincreasing copy plus the permutation applied: sorted[i] =
    /// original[perm[i]] (0-based). The sort is stable.
    [[nodiscard]] std::pair<DiagonalList, std::vector<std::size_t>>
    sorted_descending() const;

    /// Power sum s_k of the entries, k >= 1.
    [[nodiscard]] double s(int k) const;

private:
    std::vector<double> entries_;
};

/// One necessary-condition check: identifier, outcome, the computed witness
/// quantity, and the margin by which the condition holds (negative margins
/// beyond tolerance mean failure).
struct ConditionRecord {
    std::string id;
    bool holds = false;
    double witness = 0.0;
    double margin = 0.0;
};

struct NecessaryReport {
    std::vector<ConditionRecord> conditions;

    [[nodiscard]] bool all_hold() const;
    [[nodiscard]] double worst_margin() const;
};

/// Runs the realisability necessary-condition battery on sigma:
/// self-conjugacy (structural), Perron dominance, nonnegative power sums
/// s_k for k = 1..k_max*m_max, and the moment inequalities
/// s_k^m <= n^(m-1) s_{km} for k <= k_max, m <= m_max.
[[nodiscard]] NecessaryReport check_necessary(const Spectrum& sigma,
                                              int k_max = 6, int m_max = 3,
                                              double tol = kDefaultTolerance);

/// Diagonal-vs-spectrum necessity: trace equality s_1(delta) = s_1(sigma)
/// and s_m(delta) <= s_m(sigma) for m = 2..m_max.
[[nodiscard]] NecessaryReport check_diag_necessary(
    const Spectrum& sigma, const DiagonalList& delta, int m_max = 4,
    double tol = kDefaultTolerance);

struct TargetPoly {
    /// Monic with roots lambda_2..lambda_n (degree n-1); its coefficients
    /// are the c_i used throughout the b-solvers.
    RealPolynomial g;
    /// (x - rho) * g, the full target characteristic polynomial.
    RealPolynomial full;
};

/// Expands the target polynomial from real linear factors and real quadratic
/// factors for conjugate pairs, so g has exactly real coefficients. When the
/// spectrum is of Suleimanova type every c_i is nonnegative (asserted within
/// tolerance).
[[nodiscard]] TargetPoly target_poly(const Spectrum& sigma);

}  // namespace niep
