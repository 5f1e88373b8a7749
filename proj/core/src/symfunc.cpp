#include "niep/symfunc.hpp"

#include <cmath>
#include <stdexcept>

#include "niep/errors.hpp"

namespace niep {

RealList::RealList(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidInput("RealList: list must be nonempty");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InvalidInput("RealList: entries must be finite");
        }
    }
}

double elem_sym(const RealList& xs, int k) {
    const int n = static_cast<int>(xs.size());
    if (k < 0 || k > n) return 0.0;
    if (k == 0) return 1.0;
    // e[j] accumulates e_j of the prefix processed so far.
    std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = std::min(k, i + 1); j >= 1; --j) {
            e[j] += xs[static_cast<std::size_t>(i)] * e[j - 1];
        }
    }
    return e[static_cast<std::size_t>(k)];
}

double complete_hom(const RealList& xs, int k) {
    if (k < 0) return 0.0;
    if (k == 0) return 1.0;
    const int n = static_cast<int>(xs.size());
    // h[d] holds h_d of the variables appended so far.
    std::vector<double> h(static_cast<std::size_t>(k) + 1, 0.0);
    h[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        const double x = xs[static_cast<std::size_t>(i)];
        for (int d = 1; d <= k; ++d) {
            h[d] += x * h[d - 1];
        }
    }
    return h[static_cast<std::size_t>(k)];
}

std::complex<double> elem_sym_complex(
    const std::vector<std::complex<double>>& xs, int k) {
    const int n = static_cast<int>(xs.size());
    if (k < 0 || k > n) return {0.0, 0.0};
    if (k == 0) return {1.0, 0.0};
    std::vector<std::complex<double>> e(static_cast<std::size_t>(k) + 1,
                                        {0.0, 0.0});
    e[0] = {1.0, 0.0};
    for (int i = 0; i < n; ++i) {
        for (int j = std::min(k, i + 1); j >= 1; --j) {
            e[j] += xs[static_cast<std::size_t>(i)] * e[j - 1];
        }
    }
    return e[static_cast<std::size_t>(k)];
}

double power_sum(const RealList& xs, int k) {
    if (k < 1) throw PreconditionViolated("power_sum: k must be >= 1");
    double s = 0.0;
    for (double x : xs.values()) {
        double p = 1.0;
        for (int i = 0; i < k; ++i) p *= x;
        s += p;
    }
    return s;
}

double power_sum(const std::vector<std::complex<double>>& xs, int k,
                 double tol) {
    if (k < 1) throw PreconditionViolated("power_sum: k must be >= 1");
    std::complex<double> s{0.0, 0.0};
    double scale = 0.0;
    for (const auto& x : xs) {
        std::complex<double> p{1.0, 0.0};
        for (int i = 0; i < k; ++i) p *= x;
        s += p;
        scale = std::max(scale, std::abs(p));
    }
    if (!near_zero(s.imag(), scale, tol)) {
        throw NonRealResult(
            "power_sum: imaginary residue exceeds tolerance; input list is "
            "not self-conjugate");
    }
    return s.real();
}

SymTable::SymTable(const RealList& delta, int degree_bound)
    : n_(static_cast<int>(delta.size())), degree_bound_(degree_bound) {
    if (degree_bound_ < n_) {
        throw PreconditionViolated("SymTable: degree_bound must be >= n");
    }
    const int n = n_;
    const int D = degree_bound_;
    const auto& a = delta.values();

    eps_.assign(static_cast<std::size_t>(n) + 1,
                std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
    eta_.assign(static_cast<std::size_t>(D) + 1,
                std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
    eps_prime_.assign(
        static_cast<std::size_t>(n) + 1,
        std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));

    // eps_i^(j) = eps_i^(j-1) + a_j * eps_{i-1}^(j-1)
    eps_[0][0] = 1.0;
    for (int j = 1; j <= n; ++j) {
        const double aj = a[static_cast<std::size_t>(j - 1)];
        eps_[0][j] = 1.0;
        for (int i = 1; i <= n; ++i) {
            eps_[i][j] = eps_[i][j - 1] + aj * eps_[i - 1][j - 1];
        }
    }

    // eta_i^(j) = sum_{r=0}^{i} a_j^r * eta_{i-r}^(j-1)
    eta_[0][0] = 1.0;
    for (int j = 1; j <= n; ++j) {
        const double aj = a[static_cast<std::size_t>(j - 1)];
        eta_[0][j] = 1.0;
        for (int i = 1; i <= D; ++i) {
            double acc = 0.0;
            double p = 1.0;  // a_j^r
            for (int r = 0; r <= i; ++r) {
                acc += p * eta_[i - r][j - 1];
                p *= aj;
            }
            eta_[i][j] = acc;
        }
    }

    // Tail lists, filled backwards: column j holds e_i(a_{j+1}, ..., a_n).
    eps_prime_[0][n] = 1.0;
    for (int j = n - 1; j >= 0; --j) {
        const double next = a[static_cast<std::size_t>(j)];
        eps_prime_[0][j] = 1.0;
        for (int i = 1; i <= n - j; ++i) {
            eps_prime_[i][j] = eps_prime_[i][j + 1] + next * eps_prime_[i - 1][j + 1];
        }
    }
}

double SymTable::eps(int i, int j) const {
    if (i < 0 || j < 0) return 0.0;
    const int jj = std::min(j, n_);  // zero-padding beyond n changes nothing
    if (i > jj) return 0.0;
    return eps_[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
}

double SymTable::eta(int i, int j) const {
    if (i < 0) return 0.0;
    if (i == 0) return 1.0;
    if (j <= 0) return 0.0;
    if (i > degree_bound_) {
        throw std::out_of_range("SymTable::eta: index beyond degree bound");
    }
    const int jj = std::min(j, n_);
    return eta_[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
}

double SymTable::eps_prime(int i, int j) const {
    if (i < 0 || j < 0 || j > n_) return 0.0;
    if (i > n_ - j) return 0.0;
    return eps_prime_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

SymTable build_sym_table(const RealList& delta, int degree_bound) {
    const int n = static_cast<int>(delta.size());
    return SymTable(delta, degree_bound == 0 ? n : degree_bound);
}

}  // namespace niep
