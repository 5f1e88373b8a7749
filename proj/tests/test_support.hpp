#pragma once

#include <complex>
#include <cstdint>
#include <vector>

// Brute-force oracles, independent of the library's recurrence-based
// implementations: elementary symmetric functions by subset enumeration,
// complete homogeneous ones by multiset enumeration, and polynomial
// expansion straight from complex roots.

namespace test_support {

inline double brute_force_elem_sym(const std::vector<double>& xs, int k) {
    const int n = static_cast<int>(xs.size());
    if (k < 0 || k > n) return 0.0;
    if (k == 0) return 1.0;
    double sum = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != k) continue;
        double product = 1.0;
        for (int i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) product *= xs[static_cast<std::size_t>(i)];
        }
        sum += product;
    }
    return sum;
}

inline void enumerate_multisets(const std::vector<double>& xs, int k, int start,
                                double product, double& sum) {
    if (k == 0) {
        sum += product;
        return;
    }
    for (int i = start; i < static_cast<int>(xs.size()); ++i) {
        enumerate_multisets(xs, k - 1, i,
                            product * xs[static_cast<std::size_t>(i)], sum);
    }
}

inline double brute_force_complete_hom(const std::vector<double>& xs, int k) {
    if (k < 0) return 0.0;
    if (k == 0) return 1.0;
    double sum = 0.0;
    enumerate_multisets(xs, k, 0, 1.0, sum);
    return sum;
}

/// Monic polynomial with the given complex roots, expanded by complex
/// convolution. Returns the coefficients in decreasing powers (real parts)
/// and reports the largest imaginary residue through max_imag.
inline std::vector<double> poly_from_roots(
    const std::vector<std::complex<double>>& roots, double* max_imag = nullptr) {
    std::vector<std::complex<double>> coeffs{{1.0, 0.0}};
    for (const auto& root : roots) {
        std::vector<std::complex<double>> next(coeffs.size() + 1, {0.0, 0.0});
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i];
            next[i + 1] -= root * coeffs[i];
        }
        coeffs = std::move(next);
    }
    std::vector<double> out;
    out.reserve(coeffs.size());
    double residue = 0.0;
    for (const auto& c : coeffs) {
        out.push_back(c.real());
        residue = std::max(residue, std::abs(c.imag()));
    }
    if (max_imag != nullptr) *max_imag = residue;
    return out;
}

}  // namespace test_support
