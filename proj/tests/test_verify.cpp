#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "niep/errors.hpp"
#include "niep/realize.hpp"
#include "niep/selftest.hpp"
#include "niep/spectra.hpp"
#include "niep/verify.hpp"

using namespace niep;
using selftest::Rng;

namespace {

Spectrum golden_spectrum() {
    return parse_spectrum({{4, 0}, {0, 1}, {0, -1}, {0, 1}, {0, -1}});
}

CompanionDiagonalMatrix golden_matrix() {
    return CompanionDiagonalMatrix({2, 2, 0, 0, 0}, {2, 16, 55, 50});
}

}  // namespace

TEST_CASE("structured characteristic polynomial") {
    CHECK(charpoly_structured(golden_matrix()).coefficients() ==
          std::vector<double>{1, -4, 2, -8, 1, -4});

    CHECK(charpoly_structured(CompanionDiagonalMatrix({1.5}, {}))
              .coefficients() == std::vector<double>{1, -1.5});

    CHECK(charpoly_structured(CompanionDiagonalMatrix({6, 4, 0}, {1, 20}))
              .coefficients() == std::vector<double>{1, -10, 23, -14});
}

TEST_CASE("dense characteristic polynomial") {
    CHECK(charpoly_dense(DenseMatrix::identity(3)).coefficients() ==
          std::vector<double>{1, -3, 3, -1});

    DenseMatrix example(3);
    const double rows[3][3] = {{6, 1, 0}, {0, 4, 1}, {20, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) example.at(i, j) = rows[i][j];
    const RealPolynomial p = charpoly_dense(example);
    CHECK(p.c(0) == 1.0);
    CHECK(p.c(1) == doctest::Approx(-10.0));
    CHECK(p.c(2) == doctest::Approx(23.0));
    CHECK(p.c(3) == doctest::Approx(-14.0));

    CHECK(charpoly_dense(DenseMatrix(4)).coefficients() ==
          std::vector<double>{1, 0, 0, 0, 0});

    CHECK_THROWS_AS(charpoly_dense(DenseMatrix(65)), DimensionMismatch);
    CHECK_THROWS_AS(charpoly_dense(DenseMatrix()), DimensionMismatch);
}

TEST_CASE("structured and dense routes agree on random matrices") {
    Rng rng(42);
    const auto result = selftest::suite_structured_vs_dense(rng, 200);
    CHECK(result.failures == 0);
    CHECK(result.worst_margin <= 1e-8);
}

TEST_CASE("certify the golden realization") {
    const CertReport report = certify(golden_matrix(), golden_spectrum());
    CHECK(report.certified());
    CHECK(report.charpoly_match);
    CHECK(report.max_coeff_deviation == 0.0);
    CHECK(report.residual_max <= 1e-9);
    CHECK(report.nonnegative);
    CHECK(report.violations.empty());
    CHECK(report.oracle_checked);
    CHECK(report.oracle_match);
}

TEST_CASE("certify flags a perturbed bottom row") {
    // Shifting b_3 by +1 shifts the x^2 coefficient by exactly -(x-2)^2's
    // leading term: deviation 1 there, 4 on the lower two.
    const CompanionDiagonalMatrix tampered({2, 2, 0, 0, 0}, {2, 17, 55, 50});
    const CertReport report = certify(tampered, golden_spectrum());
    CHECK_FALSE(report.certified());
    CHECK_FALSE(report.charpoly_match);
    CHECK(report.nonnegative);
    const RealPolynomial f = charpoly_structured(tampered);
    const RealPolynomial target = target_poly(golden_spectrum()).full;
    CHECK(std::abs(f.c(3) - target.c(3)) == doctest::Approx(1.0));
    CHECK(report.max_coeff_deviation == doctest::Approx(4.0));
    // The two charpoly routes still agree with each other.
    CHECK(report.oracle_match);
}

TEST_CASE("certify audits nonnegativity") {
    // Ascending diagonal forces b_4 = -1: same spectrum, not nonnegative.
    const CompanionDiagonalMatrix ascending({0, 0, 0, 2, 2}, {2, 8, -1, 4});
    const CertReport report = certify(ascending, golden_spectrum());
    CHECK(report.charpoly_match);
    CHECK_FALSE(report.nonnegative);
    CHECK_FALSE(report.certified());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].row == 5);
    CHECK(report.violations[0].col == 2);
    CHECK(report.violations[0].value == doctest::Approx(-1.0));
}

TEST_CASE("certify rejects dimension mismatches") {
    CHECK_THROWS_AS(certify(golden_matrix(), parse_spectrum({{3, 0}})),
                    DimensionMismatch);
}

TEST_CASE("bottom-row perturbations shift the polynomial linearly") {
    Rng rng(7);
    for (int c = 0; c < 50; ++c) {
        const int n = selftest::uniform_int(rng, 2, 8);
        std::vector<double> diag(static_cast<std::size_t>(n));
        for (double& v : diag) v = selftest::uniform(rng, 0.0, 3.0);
        std::vector<double> b(static_cast<std::size_t>(n) - 1);
        for (double& v : b) v = selftest::uniform(rng, 0.0, 3.0);
        const CompanionDiagonalMatrix base(diag, b);
        const RealPolynomial f = charpoly_structured(base);

        const int j = selftest::uniform_int(rng, 2, n);
        const double t = selftest::uniform(rng, -2.0, 2.0);
        auto shifted_b = b;
        shifted_b[static_cast<std::size_t>(j) - 2] += t;
        const RealPolynomial g =
            charpoly_structured(CompanionDiagonalMatrix(diag, shifted_b));

        // f_shifted - f = -t * prod_{i<=n-j} (x - a_i).
        RealPolynomial prefix = RealPolynomial::one();
        for (int i = 0; i < n - j; ++i) {
            prefix = prefix.times_linear(diag[static_cast<std::size_t>(i)]);
        }
        for (int k = 0; k <= prefix.degree(); ++k) {
            const double expected = -t * prefix.c(k);
            const double got =
                g.c(k + (n - prefix.degree())) - f.c(k + (n - prefix.degree()));
            CHECK(got == doctest::Approx(expected).epsilon(1e-11));
        }
    }
}

TEST_CASE("certification is sensitive to small bottom-row changes") {
    const Spectrum sigma = golden_spectrum();
    const auto base = golden_matrix();
    for (int j = 2; j <= 5; ++j) {
        auto b = base.b();
        b[static_cast<std::size_t>(j) - 2] += 2e-3;
        const CertReport report =
            certify(CompanionDiagonalMatrix(base.diag(), b), sigma);
        CHECK_FALSE(report.charpoly_match);
    }
}
