#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "niep/tolerance.hpp"

namespace niep {

/// A finite, nonempty list of finite real scalars. Entry order is preserved;
/// most operations on it are symmetric in the entries, but the truncated-list
/// tables are not.
class RealList {
public:
    explicit RealList(std::vector<double> values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
};

/// k-th elementary symmetric function e_k of the list. Total in k:
/// returns 1 for k = 0 and 0 for k < 0 or k > len(xs).
[[nodiscard]] double elem_sym(const RealList& xs, int k);

/// k-th complete homogeneous symmetric function h_k of the list. Total in k:
/// returns 1 for k = 0 and 0 for k < 0.
[[nodiscard]] double complete_hom(const RealList& xs, int k);

/// e_k of a complex list, evaluated by the complex coefficient recurrence.
[[nodiscard]] std::complex<double> elem_sym_complex(
    const std::vector<std::complex<double>>& xs, int k);

/// Power sum s_k = sum of k-th powers, k >= 1.
[[nodiscard]] double power_sum(const RealList& xs, int k);

/// Power sum of a self-conjugate complex list. The imaginary parts must
/// cancel; throws NonRealResult if the imaginary residue exceeds tolerance
/// relative to the magnitude of the sum.
[[nodiscard]] double power_sum(const std::vector<std::complex<double>>& xs,
                               int k, double tol = kDefaultTolerance);

/// Tables of symmetric functions of the truncated lists of a fixed list
/// delta = (a_1, ..., a_n). With delta^(j) denoting the first j entries
/// (zero-padded beyond n), the table holds
///
///   eps(i, j)       = e_i(delta^(j))
///   eta(i, j)       = h_i(delta^(j))
///   eps_prime(i, j) = e_i(a_{j+1}, ..., a_n)
///
/// All lookups are total: out-of-range indices return 0 (except the i = 0
/// row, which is identically 1), and superscripts j >= n saturate to n.
/// These conventions are relied on by the b-solvers; callers never need
/// their own index guards.
class SymTable {
public:
    SymTable(const RealList& delta, int degree_bound);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int degree_bound() const { return degree_bound_; }

    [[nodiscard]] double eps(int i, int j) const;
    [[nodiscard]] double eta(int i, int j) const;
    [[nodiscard]] double eps_prime(int i, int j) const;

private:
    int n_;
    int degree_bound_;
    std::vector<std::vector<double>> eps_;        // [i][j], 0..n x 0..n
    std::vector<std::vector<double>> eta_;        // [i][j], 0..D x 0..n
    std::vector<std::vector<double>> eps_prime_;  // [i][j], 0..n x 0..n
};

/// Builds the full table for delta. The homogeneous rows are filled up to
/// degree_bound (>= n required; pass 0 to default to n).
[[nodiscard]] SymTable build_sym_table(const RealList& delta,
                                       int degree_bound = 0);

}  // namespace niep
