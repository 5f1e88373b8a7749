#include "niep/realize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "niep/errors.hpp"

namespace niep {

namespace {

void require_matching_length(const Spectrum& sigma, const DiagonalList& delta) {
    if (static_cast<int>(delta.n()) != sigma.n()) {
        throw DimensionMismatch(
            "diagonal length must equal the spectrum length");
    }
}

void require_trace_match(const Spectrum& sigma, const DiagonalList& delta,
                         double tol) {
    const double s1_sigma = sigma.s(1);
    const double s1_delta = delta.s(1);
    if (!near_zero(s1_delta - s1_sigma,
                   std::max(std::abs(s1_sigma), std::abs(s1_delta)), tol)) {
        std::ostringstream msg;
        msg << "trace condition does not hold: s1(diagonal) = " << s1_delta
            << ", s1(spectrum) = " << s1_sigma;
        throw PreconditionViolated(msg.str());
    }
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

}  // namespace

GateResult gate(const Spectrum& sigma, const DiagonalList& delta, double tol) {
    require_matching_length(sigma, delta);
    GateResult result;

    double max_re = 0.0;
    bool first = true;
    for (const auto& v : sigma.rest()) {
        if (first || v.real() > max_re) max_re = v.real();
        first = false;
    }
    result.suleimanova_margin = sigma.rest().empty() ? 0.0 : -max_re;

    const double s1_sigma = sigma.s(1);
    const double s1_delta = delta.s(1);
    result.s1_margin = -std::abs(s1_delta - s1_sigma);

    const double s2_sigma = sigma.s(2);
    const double s2_delta = delta.s(2);
    result.s2_margin = s2_sigma - s2_delta;

    if (!is_suleimanova(sigma, tol)) {
        std::ostringstream detail;
        detail << "a non-Perron entry has positive real part " << max_re
               << "; for real 3x3 spectra with positive entries use the "
                  "dedicated 3x3 construction";
        result.violation = {"suleimanova", result.suleimanova_margin,
                            detail.str()};
        return result;
    }
    if (!near_zero(s1_delta - s1_sigma,
                   std::max(std::abs(s1_sigma), std::abs(s1_delta)), tol)) {
        std::ostringstream detail;
        detail << "s1(diagonal) = " << s1_delta << " must equal s1(spectrum) = "
               << s1_sigma;
        result.violation = {"s1", result.s1_margin, detail.str()};
        return result;
    }
    if (result.s2_margin < -scaled_tol(tol, std::max(std::abs(s2_sigma),
                                                     std::abs(s2_delta)))) {
        std::ostringstream detail;
        detail << "s2(diagonal) = " << s2_delta
               << " exceeds s2(spectrum) = " << s2_sigma;
        result.violation = {"s2", result.s2_margin, detail.str()};
        return result;
    }
    result.pass = true;
    return result;
}

double b2_direct(const Spectrum& sigma, const DiagonalList& delta,
                 double tol) {
    require_matching_length(sigma, delta);
    require_trace_match(sigma, delta, tol);
    return 0.5 * (sigma.s(2) - delta.s(2));
}

KTable::KTable(int n, std::vector<std::vector<double>> k)
    : n_(n), k_(std::move(k)) {}

double KTable::k(int i, int j) const {
    if (j < 0 || j > n_ || i < 0 ||
        i >= static_cast<int>(k_[static_cast<std::size_t>(j)].size())) {
        return 0.0;
    }
    return k_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

ClosedFormSolution solve_b_closed(const Spectrum& sigma,
                                  const DiagonalList& delta, double tol) {
    require_matching_length(sigma, delta);
    require_trace_match(sigma, delta, tol);

    const int n = sigma.n();
    const RealPolynomial g = target_poly(sigma).g;
    const SymTable table = build_sym_table(RealList(delta.entries()));
    const double c1 = g.c(1);
    const double eps1n = table.eps(1, n);

    // Degree-slice table including the j = 0, 1 columns (b_0 = -1, b_1 = 0).
    std::vector<std::vector<double>> k(static_cast<std::size_t>(n) + 1);
    std::vector<double> b;
    b.reserve(static_cast<std::size_t>(n) - 1);
    for (int j = 0; j <= n; ++j) {
        auto& column = k[static_cast<std::size_t>(j)];
        column.resize(static_cast<std::size_t>(j) + 1, 0.0);
        double bj = 0.0;
        for (int i = 0; i <= j; ++i) {
            const double kij =
                table.eta(i, n - j + 1) * (c1 * g.c(j - i - 1) - g.c(j - i)) +
                eps1n * table.eta(i - 1, n - j + 1) * g.c(j - i);
            column[static_cast<std::size_t>(i)] = kij;
            bj += kij;
        }
        if (j >= 2) b.push_back(bj);
    }
    return {std::move(b), KTable(n, std::move(k))};
}

std::vector<double> solve_b_recurrence(const Spectrum& sigma,
                                       const DiagonalList& delta, double tol) {
    require_matching_length(sigma, delta);
    require_trace_match(sigma, delta, tol);

    const int n = sigma.n();
    const RealPolynomial target = target_poly(sigma).full;
    const SymTable table = build_sym_table(RealList(delta.entries()));

    // b_k = -q_k + (-1)^k e_k(delta)
    //       - sum_{j=2}^{k-1} (-1)^(k-j) e_{k-j}(first n-j entries) b_j,
    // where q_k is the x^(n-k) coefficient of the target polynomial.
    std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) - 1);
    for (int kk = 2; kk <= n; ++kk) {
        const double sign_k = (kk % 2 == 0) ? 1.0 : -1.0;
        double acc = -target.c(kk) + sign_k * table.eps(kk, n);
        for (int j = 2; j <= kk - 1; ++j) {
            const double sign = ((kk - j) % 2 == 0) ? 1.0 : -1.0;
            acc -= sign * table.eps(kk - j, n - j) * b[static_cast<std::size_t>(j)];
        }
        b[static_cast<std::size_t>(kk)] = acc;
        out.push_back(acc);
    }
    return out;
}

CompanionDiagonalMatrix assemble(const DiagonalList& delta,
                                 const std::vector<double>& b) {
    if (b.size() + 1 != delta.n()) {
        throw DimensionMismatch("assemble: need exactly n-1 bottom-row entries");
    }
    return CompanionDiagonalMatrix(delta.entries(), b);
}

namespace {

/// Shared tail of all realization paths: cross-check the two solvers,
/// clamp roundoff negatives, assemble, certify.
RealizeResult finish_realization(const Spectrum& sigma,
                                 const DiagonalList& sorted_delta,
                                 std::vector<int> permutation, double tol) {
    RealizeResult result;
    result.permutation = std::move(permutation);

    auto closed = solve_b_closed(sigma, sorted_delta, tol);
    const auto recurrence = solve_b_recurrence(sigma, sorted_delta, tol);
    for (std::size_t i = 0; i < closed.b.size(); ++i) {
        if (!near(closed.b[i], recurrence[i], tol)) {
            std::ostringstream msg;
            msg << "b solvers disagree at j = " << (i + 2) << ": "
                << closed.b[i] << " vs " << recurrence[i];
            throw InternalContradiction(msg.str());
        }
    }

    double b_scale = 1.0;
    for (double v : closed.b) b_scale = std::max(b_scale, std::abs(v));
    for (std::size_t i = 0; i < closed.b.size(); ++i) {
        double& v = closed.b[i];
        if (v < 0.0) {
            if (v < -scaled_tol(tol, b_scale)) {
                std::ostringstream msg;
                msg << "passing gate produced negative entry b_" << (i + 2)
                    << " = " << v;
                throw InternalContradiction(msg.str());
            }
            v = 0.0;
        }
    }

    CompanionDiagonalMatrix matrix = assemble(sorted_delta, closed.b);
    CertReport cert = certify(matrix, sigma, tol);
    if (!cert.certified()) {
        throw InternalContradiction(
            "certification failed for a matrix built from a passing gate");
    }
    result.feasible = true;
    result.b = closed.b;
    result.matrix = std::move(matrix);
    result.certificate = std::move(cert);
    return result;
}

}  // namespace

RealizeResult realize(const Spectrum& sigma, const DiagonalList& delta,
                      double tol) {
    require_matching_length(sigma, delta);

    auto [sorted, perm0] = delta.sorted_descending();
    std::vector<int> permutation;
    permutation.reserve(perm0.size());
    for (std::size_t p : perm0) permutation.push_back(static_cast<int>(p) + 1);

    const GateResult g = gate(sigma, sorted, tol);
    if (!g.pass) {
        RealizeResult result;
        result.violation = g.violation;
        result.permutation = std::move(permutation);
        return result;
    }
    return finish_realization(sigma, sorted, std::move(permutation), tol);
}

RealizeResult realize_2x2(double lambda1, double lambda2, double a1, double a2,
                          double tol) {
    if (lambda1 < lambda2) {
        throw PreconditionViolated("realize_2x2: lambda1 >= lambda2 required");
    }
    if (a1 < a2 || a2 < -tol) {
        throw PreconditionViolated("realize_2x2: a1 >= a2 >= 0 required");
    }
    RealizeResult result;
    if (a1 > lambda1 + scaled_tol(tol, std::max(std::abs(a1), std::abs(lambda1)))) {
        std::ostringstream detail;
        detail << "a1 = " << a1 << " exceeds lambda1 = " << lambda1;
        result.violation = {"a1", lambda1 - a1, detail.str()};
        return result;
    }
    const double s1_sigma = lambda1 + lambda2;
    const double s1_delta = a1 + a2;
    if (!near_zero(s1_delta - s1_sigma,
                   std::max(std::abs(s1_sigma), std::abs(s1_delta)), tol)) {
        std::ostringstream detail;
        detail << "a1 + a2 = " << s1_delta << " must equal lambda1 + lambda2 = "
               << s1_sigma;
        result.violation = {"s1", -std::abs(s1_delta - s1_sigma), detail.str()};
        return result;
    }
    // Both conditions hold, so b2 = a1 a2 - lambda1 lambda2 is nonnegative
    // and the general machinery produces exactly it.
    const Spectrum sigma(lambda1, {{lambda2, 0.0}});
    return finish_realization(sigma, DiagonalList({a1, a2}), {1, 2}, tol);
}

namespace {

RealizeResult realize_3x3_common(const Spectrum& sigma,
                                 const std::array<double, 3>& delta,
                                 double upper_for_a1, double lower_for_a1,
                                 bool has_lower, const std::string& bound_name,
                                 double tol) {
    if (delta[0] < delta[1] || delta[1] < delta[2] || delta[2] < -tol) {
        throw PreconditionViolated(
            "3x3 realization: a1 >= a2 >= a3 >= 0 required");
    }
    const double a1 = delta[0];
    RealizeResult result;
    const double scale =
        std::max({std::abs(a1), std::abs(upper_for_a1), std::abs(lower_for_a1)});
    if (a1 > upper_for_a1 + scaled_tol(tol, scale)) {
        std::ostringstream detail;
        detail << "a1 = " << a1 << " exceeds " << bound_name << " = "
               << upper_for_a1;
        result.violation = {"a1-upper", upper_for_a1 - a1, detail.str()};
        return result;
    }
    if (has_lower && a1 < lower_for_a1 - scaled_tol(tol, scale)) {
        std::ostringstream detail;
        detail << "a1 = " << a1 << " is below lambda2 = " << lower_for_a1;
        result.violation = {"a1-lower", a1 - lower_for_a1, detail.str()};
        return result;
    }

    DiagonalList sorted({delta[0], delta[1], delta[2]});
    const double s1_sigma = sigma.s(1);
    const double s1_delta = sorted.s(1);
    if (!near_zero(s1_delta - s1_sigma,
                   std::max(std::abs(s1_sigma), std::abs(s1_delta)), tol)) {
        std::ostringstream detail;
        detail << "s1(diagonal) = " << s1_delta << " must equal s1(spectrum) = "
               << s1_sigma;
        result.violation = {"s1", -std::abs(s1_delta - s1_sigma), detail.str()};
        return result;
    }
    const double s2_sigma = sigma.s(2);
    const double s2_delta = sorted.s(2);
    const double s2_margin = s2_sigma - s2_delta;
    if (s2_margin < -scaled_tol(tol, std::max(std::abs(s2_sigma),
                                              std::abs(s2_delta)))) {
        std::ostringstream detail;
        detail << "s2(diagonal) = " << s2_delta
               << " exceeds s2(spectrum) = " << s2_sigma;
        result.violation = {"s2", s2_margin, detail.str()};
        return result;
    }

    // b2 from the power sums, b3 from evaluating the target at a1; both are
    // nonnegative under the conditions just checked.
    double b2 = 0.5 * s2_margin;
    double b3 = -target_poly(sigma).full.eval(a1);
    const double b_scale = std::max({1.0, std::abs(b2), std::abs(b3)});
    if (b2 < -scaled_tol(tol, b_scale) || b3 < -scaled_tol(tol, b_scale)) {
        throw InternalContradiction(
            "3x3 realization: passing conditions produced a negative entry");
    }
    b2 = std::max(b2, 0.0);
    b3 = std::max(b3, 0.0);

    CompanionDiagonalMatrix matrix = assemble(sorted, {b2, b3});
    CertReport cert = certify(matrix, sigma, tol);
    if (!cert.certified()) {
        throw InternalContradiction("3x3 realization: certification failed");
    }
    result.feasible = true;
    result.b = {b2, b3};
    result.matrix = std::move(matrix);
    result.certificate = std::move(cert);
    result.permutation = {1, 2, 3};
    return result;
}

}  // namespace

RealizeResult realize_3x3_real(const std::array<double, 3>& lambdas,
                               const std::array<double, 3>& delta, double tol) {
    if (lambdas[0] < lambdas[1] || lambdas[1] < lambdas[2]) {
        throw PreconditionViolated(
            "realize_3x3_real: lambda1 >= lambda2 >= lambda3 required");
    }
    const Spectrum sigma(lambdas[0], {{lambdas[1], 0.0}, {lambdas[2], 0.0}});
    return realize_3x3_common(sigma, delta, lambdas[0], lambdas[1], true,
                              "lambda1", tol);
}

RealizeResult realize_3x3_complex(double rho, double alpha, double beta,
                                  const std::array<double, 3>& delta,
                                  double tol) {
    if (rho < 0.0 || beta < 0.0) {
        throw PreconditionViolated(
            "realize_3x3_complex: rho >= 0 and beta >= 0 required");
    }
    const Spectrum sigma(rho, {{alpha, beta}, {alpha, -beta}});
    return realize_3x3_common(sigma, delta, rho, 0.0, false, "rho", tol);
}

RangeResult::RangeResult(double a_min, double a_max, double s1, int n)
    : a_min_(a_min), a_max_(a_max), s1_(s1), n_(n) {}

DiagonalList RangeResult::witness(double a) const {
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n_));
    entries.push_back(a);
    if (n_ > 1) {
        const double share = (s1_ - a) / (n_ - 1);
        for (int i = 1; i < n_; ++i) entries.push_back(share);
    }
    std::sort(entries.begin(), entries.end(), std::greater<double>());
    return DiagonalList(std::move(entries));
}

RangeResult diag_range(const Spectrum& sigma, double tol) {
    if (!is_suleimanova(sigma, tol)) {
        throw PreconditionViolated(
            "diag_range applies to spectra whose non-Perron entries have "
            "nonpositive real parts");
    }
    const int n = sigma.n();
    const double s1 = sigma.s(1);
    const double s2 = sigma.s(2);
    const double scale = std::max({1.0, std::abs(s1), std::abs(s2)});
    if (s1 < -scaled_tol(tol, scale)) {
        throw NotRealisable("spectrum is not realisable: negative trace");
    }
    const double jll = n * s2 - s1 * s1;
    if (jll < -scaled_tol(tol, std::max(scale * scale, std::abs(jll)))) {
        throw NotRealisable(
            "spectrum is not realisable: trace-squared exceeds n times the "
            "second moment");
    }
    const double delta_sq = (n - 1) * std::max(jll, 0.0);
    const double delta = std::sqrt(delta_sq);
    const double center = s1 / n;
    const double a_min = std::max(0.0, center - delta / n);
    const double a_max = std::min(std::max(s1, 0.0), center + delta / n);
    return RangeResult(a_min, a_max, std::max(s1, 0.0), n);
}

std::vector<double> q_values(double r,
                             const std::vector<std::complex<double>>& xs,
                             double tol) {
    const int n = static_cast<int>(xs.size());
    for (const auto& x : xs) {
        if (x.real() < -scaled_tol(tol, std::abs(x))) {
            throw PreconditionViolated(
                "q_values: entries must have nonnegative real parts");
        }
    }

    std::vector<double> e(static_cast<std::size_t>(n) + 2, 0.0);
    double e_scale = 1.0;
    for (int k = 0; k <= n + 1; ++k) {
        const std::complex<double> ek = elem_sym_complex(xs, k);
        e_scale = std::max(e_scale, std::abs(ek));
        if (!near_zero(ek.imag(), e_scale, tol)) {
            throw NonRealResult(
                "q_values: elementary symmetric function has imaginary "
                "residue; input list is not self-conjugate");
        }
        e[static_cast<std::size_t>(k)] = ek.real();
    }

    const int half_up = (n + 1) / 2;
    const int half_down = n / 2;
    std::vector<double> q(static_cast<std::size_t>(n) + 2, 0.0);
    for (int idx = 0; idx <= n + 1; ++idx) {
        const int k = idx / 2;
        const double numerator =
            e[static_cast<std::size_t>(idx)] -
            (idx >= 1 ? r * e[static_cast<std::size_t>(idx) - 1] : 0.0);
        const double denom = (idx % 2 == 0) ? binomial(half_up, k)
                                            : binomial(half_down, k);
        q[static_cast<std::size_t>(idx)] = numerator / denom;
    }
    return q;
}

}  // namespace niep
