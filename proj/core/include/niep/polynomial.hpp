#pragma once

#include <complex>
#include <vector>

namespace niep {

/// Monic real polynomial x^d + c_1 x^(d-1) + ... + c_d, stored as the
/// coefficient sequence [1, c_1, ..., c_d]. The c(k) accessor is total:
/// c(0) = 1, c(k) = 0 outside 0..d.
class RealPolynomial {
public:
    /// The constant polynomial 1 (degree 0).
    static RealPolynomial one();

    /// Coefficients in decreasing powers; leading entry must be exactly 1.
    explicit RealPolynomial(std::vector<double> monic_coefficients);

    [[nodiscard]] int degree() const {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    [[nodiscard]] double c(int k) const;
    [[nodiscard]] const std::vector<double>& coefficients() const {
        return coeffs_;
    }

    /// Multiply by the linear factor (x - root).
    [[nodiscard]] RealPolynomial times_linear(double root) const;

    /// Multiply by the quadratic factor (x^2 + p x + q).
    [[nodiscard]] RealPolynomial times_quadratic(double p, double q) const;

    [[nodiscard]] double eval(double x) const;
    [[nodiscard]] std::complex<double> eval(std::complex<double> z) const;

    /// Largest absolute coefficient (at least 1 for a monic polynomial).
    [[nodiscard]] double max_abs_coefficient() const;

private:
    std::vector<double> coeffs_;
};

/// Max over coefficients of |a_k - b_k| / max(1, |a_k|, |b_k|), treating
/// missing degrees as zero coefficients.
[[nodiscard]] double max_scaled_coeff_deviation(const RealPolynomial& a,
                                                const RealPolynomial& b);

}  // namespace niep
