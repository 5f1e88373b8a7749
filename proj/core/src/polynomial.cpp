#include "niep/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "niep/errors.hpp"

namespace niep {

RealPolynomial RealPolynomial::one() { return RealPolynomial({1.0}); }

RealPolynomial::RealPolynomial(std::vector<double> monic_coefficients)
    : coeffs_(std::move(monic_coefficients)) {
    if (coeffs_.empty() || coeffs_.front() != 1.0) {
        throw InvalidInput("RealPolynomial: leading coefficient must be 1");
    }
    for (double c : coeffs_) {
        if (!std::isfinite(c)) {
            throw InvalidInput("RealPolynomial: coefficients must be finite");
        }
    }
}

double RealPolynomial::c(int k) const {
    if (k < 0 || k > degree()) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

RealPolynomial RealPolynomial::times_linear(double root) const {
    std::vector<double> out(coeffs_.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] += coeffs_[i];
        out[i + 1] -= root * coeffs_[i];
    }
    return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::times_quadratic(double p, double q) const {
    std::vector<double> out(coeffs_.size() + 2, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] += coeffs_[i];
        out[i + 1] += p * coeffs_[i];
        out[i + 2] += q * coeffs_[i];
    }
    return RealPolynomial(std::move(out));
}

double RealPolynomial::eval(double x) const {
    double acc = 0.0;
    for (double c : coeffs_) acc = acc * x + c;
    return acc;
}

std::complex<double> RealPolynomial::eval(std::complex<double> z) const {
    std::complex<double> acc{0.0, 0.0};
    for (double c : coeffs_) acc = acc * z + c;
    return acc;
}

double RealPolynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double max_scaled_coeff_deviation(const RealPolynomial& a,
                                  const RealPolynomial& b) {
    const int d = std::max(a.degree(), b.degree());
    double worst = 0.0;
    for (int k = 0; k <= d; ++k) {
        // Align by power of x: coefficient of x^(d-k) in each.
        const double ca = a.c(k - (d - a.degree()));
        const double cb = b.c(k - (d - b.degree()));
        const double dev =
            std::abs(ca - cb) / std::max({1.0, std::abs(ca), std::abs(cb)});
        worst = std::max(worst, dev);
    }
    return worst;
}

}  // namespace niep
