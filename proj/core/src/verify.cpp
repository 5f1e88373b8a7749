#include "niep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "niep/errors.hpp"

namespace niep {

RealPolynomial charpoly_structured(const CompanionDiagonalMatrix& m) {
    const int n = m.n();
    const auto& a = m.diag();

    // prefix[k] = coefficients of P_k(x) = prod_{i<=k} (x - a_i).
    std::vector<RealPolynomial> prefix;
    prefix.reserve(static_cast<std::size_t>(n) + 1);
    prefix.push_back(RealPolynomial::one());
    for (int k = 1; k <= n; ++k) {
        prefix.push_back(
            prefix.back().times_linear(a[static_cast<std::size_t>(k) - 1]));
    }

    std::vector<double> f = prefix[static_cast<std::size_t>(n)].coefficients();
    for (int j = 2; j <= n; ++j) {
        const double bj = m.b_entry(j);
        const auto& pc = prefix[static_cast<std::size_t>(n - j)].coefficients();
        // P_{n-j} has degree n-j; its x^(n-j-t) coefficient lands on the
        // x^(n-j-t) coefficient of f, i.e. index j+t from the front.
        for (std::size_t t = 0; t < pc.size(); ++t) {
            f[static_cast<std::size_t>(j) + t] -= bj * pc[t];
        }
    }
    return RealPolynomial(std::move(f));
}

RealPolynomial charpoly_dense(const DenseMatrix& m) {
    const int n = m.n;
    if (n < 1) throw DimensionMismatch("charpoly_dense: empty matrix");
    if (n > kDenseCharpolyMaxDim) {
        throw DimensionMismatch(
            "charpoly_dense: dimension beyond the supported cap");
    }
    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
    coeffs[0] = 1.0;
    DenseMatrix mk(n);  // starts as zero; iterate M_k = M (M_{k-1} + c_{k-1} I)
    double ck = 1.0;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
        mk = m * mk;
        ck = -mk.trace() / k;
        coeffs[static_cast<std::size_t>(k)] = ck;
    }
    return RealPolynomial(std::move(coeffs));
}

CertReport certify(const CompanionDiagonalMatrix& m, const Spectrum& sigma,
                   double tol) {
    if (m.n() != sigma.n()) {
        throw DimensionMismatch("certify: matrix and spectrum sizes differ");
    }
    CertReport report;
    const int n = m.n();

    const RealPolynomial f = charpoly_structured(m);
    const RealPolynomial target = target_poly(sigma).full;

    report.max_coeff_deviation = 0.0;
    report.charpoly_match = true;
    for (int k = 0; k <= n; ++k) {
        const double dev = std::abs(f.c(k) - target.c(k));
        report.max_coeff_deviation = std::max(report.max_coeff_deviation, dev);
        if (dev > scaled_tol(tol, target.c(k))) report.charpoly_match = false;
    }

    report.oracle_checked = false;
    report.oracle_match = true;
    if (n <= kDenseCharpolyMaxDim) {
        const DenseMatrix dense_form = m.dense();
        const RealPolynomial g = charpoly_dense(dense_form);

        // The trace recurrence's accuracy is strongly instance-dependent, so
        // its noise floor is measured rather than modelled: rerun it on an
        // exact diagonal similarity of the matrix (same characteristic
        // polynomial, different rounding stream) and see how well it
        // reproduces itself. When it cannot do so within the comparison
        // threshold, the oracle has nothing to say and the structured
        // expansion stands alone (as it does beyond the dimension cap).
        DenseMatrix similar(n);
        std::vector<double> d(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)] = std::pow(1.375, (i % 7) - 3);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                similar.at(i, j) = dense_form.at(i, j) *
                                   d[static_cast<std::size_t>(i)] /
                                   d[static_cast<std::size_t>(j)];
            }
        }
        const RealPolynomial g2 = charpoly_dense(similar);

        const double route_scale =
            std::max(f.max_abs_coefficient(), g.max_abs_coefficient());
        const double threshold = scaled_tol(tol, route_scale);
        double self_noise =
            n * std::numeric_limits<double>::epsilon() * route_scale;
        for (int k = 0; k <= n; ++k) {
            self_noise = std::max(self_noise, std::abs(g.c(k) - g2.c(k)));
        }
        if (8.0 * self_noise <= threshold) {
            report.oracle_checked = true;
            for (int k = 0; k <= n; ++k) {
                const double dev = std::abs(f.c(k) - g.c(k));
                report.oracle_deviation = std::max(report.oracle_deviation, dev);
                if (dev > threshold) report.oracle_match = false;
            }
        }
    }

    report.residual_max = 0.0;
    for (const auto& lambda : sigma.all()) {
        double pow_n = 1.0;
        const double mod = std::abs(lambda);
        for (int i = 0; i < n; ++i) pow_n *= mod;
        const double residual = std::abs(f.eval(lambda)) / std::max(1.0, pow_n);
        report.residual_max = std::max(report.residual_max, residual);
    }
    report.residual_ok = report.residual_max <= tol;

    report.nonnegative = true;
    const DenseMatrix dense = m.dense();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (dense.at(i, j) < -tol) {
                report.nonnegative = false;
                report.violations.push_back({i + 1, j + 1, dense.at(i, j)});
            }
        }
    }
    return report;
}

}  // namespace niep
