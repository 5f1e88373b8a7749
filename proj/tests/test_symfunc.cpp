#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "niep/errors.hpp"
#include "niep/selftest.hpp"
#include "niep/symfunc.hpp"
#include "test_support.hpp"

using namespace niep;
using selftest::Rng;
using test_support::brute_force_complete_hom;
using test_support::brute_force_elem_sym;

TEST_CASE("RealList validates its entries") {
    CHECK_THROWS_AS(RealList({}), InvalidInput);
    CHECK_THROWS_AS(RealList({1.0, std::nan("")}), InvalidInput);
    CHECK_THROWS_AS(RealList({std::numeric_limits<double>::infinity()}),
                    InvalidInput);
    CHECK(RealList({0.0}).size() == 1);
}

TEST_CASE("elem_sym definitional values") {
    const RealList xs({1.0, 2.0, 3.0});
    CHECK(elem_sym(xs, 0) == 1.0);
    CHECK(elem_sym(xs, 4) == 0.0);
    CHECK(elem_sym(xs, -1) == 0.0);
    // Frozen from subset enumeration: 1*2 + 1*3 + 2*3.
    CHECK(elem_sym(xs, 2) == 11.0);
    CHECK(elem_sym(xs, 2) == brute_force_elem_sym({1.0, 2.0, 3.0}, 2));
    CHECK(elem_sym(xs, 3) == 6.0);
}

TEST_CASE("complete_hom definitional values") {
    CHECK(complete_hom(RealList({5.0}), 3) == 125.0);
    // Frozen from multiset enumeration: 1 + 1*2 + 4.
    CHECK(complete_hom(RealList({1.0, 2.0}), 2) == 7.0);
    CHECK(complete_hom(RealList({1.0, 2.0}), 2) ==
          brute_force_complete_hom({1.0, 2.0}, 2));
    CHECK(complete_hom(RealList({1.0, 2.0}), -1) == 0.0);
    CHECK(complete_hom(RealList({1.0, 2.0}), 0) == 1.0);
}

TEST_CASE("brute-force equivalence on random lists") {
    Rng rng(12345);
    for (int c = 0; c < 200; ++c) {
        const int n = selftest::uniform_int(rng, 1, 8);
        std::vector<double> ints, floats;
        for (int i = 0; i < n; ++i) {
            ints.push_back(static_cast<double>(selftest::uniform_int(rng, -4, 4)));
            floats.push_back(selftest::uniform(rng, -2.0, 2.0));
        }
        const int k = selftest::uniform_int(rng, 0, n + 1);
        CHECK(elem_sym(RealList(ints), k) == brute_force_elem_sym(ints, k));
        CHECK(complete_hom(RealList(ints), std::min(k, 6)) ==
              brute_force_complete_hom(ints, std::min(k, 6)));

        const double e = elem_sym(RealList(floats), k);
        const double e_ref = brute_force_elem_sym(floats, k);
        CHECK(std::abs(e - e_ref) <=
              1e-12 * std::max({1.0, std::abs(e), std::abs(e_ref)}));
        const double h = complete_hom(RealList(floats), std::min(k, 6));
        const double h_ref = brute_force_complete_hom(floats, std::min(k, 6));
        CHECK(std::abs(h - h_ref) <=
              1e-12 * std::max({1.0, std::abs(h), std::abs(h_ref)}));
    }
}

TEST_CASE("power sums") {
    CHECK(power_sum(RealList({2.5, 2.5, 2.5}), 1) == doctest::Approx(7.5));
    CHECK(power_sum(RealList({1.0, 2.0, 3.0}), 2) == 14.0);
    CHECK_THROWS_AS(power_sum(RealList({1.0}), 0), PreconditionViolated);

    const std::vector<std::complex<double>> golden{
        {4, 0}, {0, 1}, {0, -1}, {0, 1}, {0, -1}};
    CHECK(power_sum(golden, 2) == doctest::Approx(12.0));

    const std::vector<std::complex<double>> worked{
        {3, 0}, {0, 2}, {0, -2}, {-1, 0}};
    CHECK(power_sum(worked, 1) == doctest::Approx(2.0));

    const std::vector<std::complex<double>> unbalanced{{0, 1}};
    CHECK_THROWS_AS(power_sum(unbalanced, 1), NonRealResult);
}

TEST_CASE("symmetric function table: fixed values") {
    const SymTable t = build_sym_table(RealList({2, 2, 0, 0, 0}));
    CHECK(t.eps(2, 5) == 4.0);
    CHECK(t.eps(1, 5) == 4.0);
    CHECK(t.eps(3, 5) == 0.0);

    const SymTable zeros = build_sym_table(RealList({0, 0, 0}));
    for (int i = 1; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) CHECK(zeros.eps(i, j) == 0.0);
    }

    const SymTable ones = build_sym_table(RealList({1, 1, 0, 0}));
    CHECK(ones.eta(1, 2) == 2.0);
    CHECK(ones.eta(2, 2) == 3.0);
}

TEST_CASE("table lookups are total and saturate") {
    const SymTable t = build_sym_table(RealList({2, 2, 0, 0, 0}));
    for (int i = 0; i <= 5; ++i) {
        CHECK(t.eps(i, 7) == t.eps(i, 5));
        CHECK(t.eta(i, 100) == t.eta(i, 5));
    }
    CHECK(t.eps(-1, 3) == 0.0);
    CHECK(t.eps(4, 3) == 0.0);
    CHECK(t.eps(6, 9) == 0.0);
    CHECK(t.eta(-1, 2) == 0.0);
    CHECK(t.eta(2, 0) == 0.0);
    for (int j = 0; j <= 5; ++j) {
        CHECK(t.eps(0, j) == 1.0);
        CHECK(t.eta(0, j) == 1.0);
    }
    CHECK(t.eps_prime(0, 4) == 1.0);
    CHECK(t.eps_prime(2, 4) == 0.0);
    CHECK(t.eps_prime(1, 5) == 0.0);
    CHECK(t.eps_prime(-1, 2) == 0.0);

    CHECK_THROWS_AS(build_sym_table(RealList({1.0, 2.0}), 1),
                    PreconditionViolated);
    CHECK_THROWS_AS((void)t.eta(6, 3), std::out_of_range);
}

TEST_CASE("tail lists match brute force") {
    Rng rng(777);
    for (int c = 0; c < 50; ++c) {
        const RealList xs = selftest::random_real_list(rng, 8);
        const int n = static_cast<int>(xs.size());
        const SymTable t = build_sym_table(xs);
        for (int j = 0; j <= n - 1; ++j) {
            std::vector<double> tail(xs.values().begin() + j,
                                     xs.values().end());
            for (int i = 0; i <= n - j; ++i) {
                const double ref = brute_force_elem_sym(tail, i);
                CHECK(t.eps_prime(i, j) ==
                      doctest::Approx(ref).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("append recurrences hold on random lists") {
    Rng rng(999);
    for (int c = 0; c < 50; ++c) {
        const RealList xs = selftest::random_real_list(rng, 9);
        const int n = static_cast<int>(xs.size());
        const SymTable t = build_sym_table(xs);
        for (int j = 1; j <= n; ++j) {
            const double aj = xs[static_cast<std::size_t>(j) - 1];
            for (int i = 0; i <= n; ++i) {
                CHECK(t.eps(i, j) ==
                      doctest::Approx(t.eps(i, j - 1) + aj * t.eps(i - 1, j - 1))
                          .epsilon(1e-12));
            }
            for (int i = 0; i <= n; ++i) {
                double acc = 0.0;
                double p = 1.0;
                for (int r = 0; r <= i; ++r) {
                    acc += p * t.eta(i - r, j - 1);
                    p *= aj;
                }
                CHECK(t.eta(i, j) == doctest::Approx(acc).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("alternating e/h convolution vanishes") {
    Rng rng(2024);
    const auto result = selftest::suite_eh_identity(rng, 300);
    CHECK(result.failures == 0);
    CHECK(result.worst_margin <= 1e-10);
}

TEST_CASE("truncated-list convolution vanishes") {
    Rng rng(2025);
    const auto result = selftest::suite_truncated_identity(rng, 300);
    CHECK(result.failures == 0);
    CHECK(result.worst_margin <= 1e-10);
}

TEST_CASE("head/tail split of the second elementary function") {
    Rng rng(2026);
    const auto result = selftest::suite_splitting_identity(rng, 300);
    CHECK(result.failures == 0);
    CHECK(result.worst_margin <= 1e-10);
}

TEST_CASE("complex elementary symmetric functions") {
    const std::vector<std::complex<double>> xs{{0, 1}, {0, -1}};
    CHECK(elem_sym_complex(xs, 0) == std::complex<double>{1.0, 0.0});
    CHECK(elem_sym_complex(xs, 1) == std::complex<double>{0.0, 0.0});
    CHECK(elem_sym_complex(xs, 2) == std::complex<double>{1.0, 0.0});
    CHECK(elem_sym_complex(xs, 3) == std::complex<double>{0.0, 0.0});
}
