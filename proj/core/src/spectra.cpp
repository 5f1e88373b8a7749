#include "niep/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "niep/errors.hpp"
#include "niep/symfunc.hpp"

namespace niep {

namespace {

using Complex = std::complex<double>;

void require_finite(const std::vector<Complex>& values) {
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InvalidInput("spectrum entries must be finite");
        }
    }
}

/// Snaps near-real and near-imaginary-axis entries onto the axes, then
/// matches the remaining entries into conjugate pairs, replacing each pair
/// by its exact symmetrization. Throws NotSelfConjugate when no perfect
/// matching exists within tolerance.
std::vector<Complex> symmetrize_self_conjugate(std::vector<Complex> rest,
                                               double tol) {
    for (auto& v : rest) {
        const double scale = std::max(1.0, std::abs(v));
        if (std::abs(v.imag()) <= tol * scale) v.imag(0.0);
        if (std::abs(v.real()) <= tol * scale) v.real(0.0);
    }
    std::vector<bool> matched(rest.size(), false);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (matched[i] || rest[i].imag() == 0.0) continue;
        std::size_t best = rest.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (j == i || matched[j] || rest[j].imag() == 0.0) continue;
            // Opposite-half-plane entries only.
            if ((rest[i].imag() > 0.0) == (rest[j].imag() > 0.0)) continue;
            const double dist = std::abs(rest[i] - std::conj(rest[j]));
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        const double scale = std::max(1.0, std::abs(rest[i]));
        if (best == rest.size() || best_dist > tol * scale) {
            std::ostringstream msg;
            msg << "no conjugate partner for (" << rest[i].real() << ", "
                << rest[i].imag() << ")";
            throw NotSelfConjugate(msg.str());
        }
        const double re = 0.5 * (rest[i].real() + rest[best].real());
        const double im = 0.5 * (std::abs(rest[i].imag()) +
                                 std::abs(rest[best].imag()));
        rest[i] = {re, rest[i].imag() > 0.0 ? im : -im};
        rest[best] = {re, rest[best].imag() > 0.0 ? im : -im};
        matched[i] = matched[best] = true;
    }
    return rest;
}

double power_sum_with_scale(const std::vector<Complex>& xs, int k,
                            double* scale_out) {
    Complex s{0.0, 0.0};
    double scale = 0.0;
    for (const auto& x : xs) {
        Complex p{1.0, 0.0};
        for (int i = 0; i < k; ++i) p *= x;
        s += p;
        scale += std::abs(p);
    }
    if (scale_out != nullptr) *scale_out = scale;
    return s.real();
}

}  // namespace

Spectrum::Spectrum(double rho, std::vector<Complex> rest, double tol)
    : rho_(rho), rest_(std::move(rest)) {
    if (!std::isfinite(rho_)) {
        throw InvalidInput("Perron entry must be finite");
    }
    if (rho_ < -tol * std::max(1.0, std::abs(rho_))) {
        throw InvalidInput("Perron entry must be nonnegative");
    }
    rho_ = std::max(rho_, 0.0);
    require_finite(rest_);
    rest_ = symmetrize_self_conjugate(std::move(rest_), tol);
}

std::vector<Complex> Spectrum::all() const {
    std::vector<Complex> out;
    out.reserve(rest_.size() + 1);
    out.emplace_back(rho_, 0.0);
    out.insert(out.end(), rest_.begin(), rest_.end());
    return out;
}

double Spectrum::s(int k) const { return power_sum(all(), k); }

Spectrum parse_spectrum(const std::vector<Complex>& values, double tol) {
    if (values.empty()) throw InvalidInput("spectrum must be nonempty");
    require_finite(values);

    // Perron candidate: the largest real nonnegative entry (so among
    // maximal-modulus entries, the one with the largest real part). Ties
    // resolve to the earliest input position. Perron dominance over the
    // remaining moduli is a reported check, not a parse failure, so lists
    // violating it can still be examined.
    std::size_t perron = values.size();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double scale = std::max(1.0, std::abs(values[i]));
        if (std::abs(values[i].imag()) > tol * scale ||
            values[i].real() < -tol * scale) {
            continue;
        }
        if (perron == values.size() ||
            values[i].real() > values[perron].real()) {
            perron = i;
        }
    }
    if (perron == values.size()) {
        throw NoPerron(
            "no entry is real and nonnegative within tolerance");
    }

    std::vector<Complex> rest;
    rest.reserve(values.size() - 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != perron) rest.push_back(values[i]);
    }
    return Spectrum(std::max(0.0, values[perron].real()), std::move(rest), tol);
}

bool is_suleimanova(const Spectrum& sigma, double tol) {
    for (const auto& v : sigma.rest()) {
        if (v.real() > tol * std::max(1.0, std::abs(v))) return false;
    }
    return true;
}

DiagonalList::DiagonalList(std::vector<double> entries, double tol)
    : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw InvalidInput("diagonal list must be nonempty");
    }
    for (double& e : entries_) {
        if (!std::isfinite(e)) {
            throw InvalidInput("diagonal entries must be finite");
        }
        if (e < -tol) {
            std::ostringstream msg;
            msg << "diagonal entry " << e << " is negative";
            throw InvalidInput(msg.str());
        }
        if (std::abs(e) <= tol) e = 0.0;
    }
}

bool DiagonalList::is_nonincreasing() const {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] > entries_[i - 1]) return false;
    }
    return true;
}

std::pair<DiagonalList, std::vector<std::size_t>>
DiagonalList::sorted_descending() const {
    std::vector<std::size_t> perm(entries_.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [this](std::size_t a, std::size_t b) {
                         return entries_[a] > entries_[b];
                     });
    std::vector<double> sorted(entries_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        sorted[i] = entries_[perm[i]];
    }
    return {DiagonalList(std::move(sorted)), std::move(perm)};
}

double DiagonalList::s(int k) const {
    return power_sum(RealList(entries_), k);
}

bool NecessaryReport::all_hold() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionRecord& r) { return r.holds; });
}

double NecessaryReport::worst_margin() const {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : conditions) worst = std::min(worst, r.margin);
    return worst;
}

NecessaryReport check_necessary(const Spectrum& sigma, int k_max, int m_max,
                                double tol) {
    if (k_max < 1 || m_max < 1) {
        throw PreconditionViolated("check_necessary: k_max, m_max >= 1");
    }
    NecessaryReport report;
    const auto entries = sigma.all();
    const int n = sigma.n();

    // Self-conjugacy is structural: Spectrum construction already matched
    // and symmetrized the conjugate pairs.
    report.conditions.push_back({"self-conjugate", true, 0.0, 0.0});

    double max_rest_mod = 0.0;
    for (const auto& v : sigma.rest())
        max_rest_mod = std::max(max_rest_mod, std::abs(v));
    const double dominance = sigma.rho() - max_rest_mod;
    report.conditions.push_back(
        {"perron-dominance", dominance >= -scaled_tol(tol, sigma.rho()),
         max_rest_mod, dominance});

    std::vector<double> s(static_cast<std::size_t>(k_max) * m_max + 1, 0.0);
    std::vector<double> s_scale(s.size(), 0.0);
    for (int k = 1; k <= k_max * m_max; ++k) {
        s[static_cast<std::size_t>(k)] =
            power_sum_with_scale(entries, k, &s_scale[static_cast<std::size_t>(k)]);
    }

    for (int k = 1; k <= k_max * m_max; ++k) {
        const double sk = s[static_cast<std::size_t>(k)];
        std::ostringstream id;
        id << "power-sum k=" << k;
        report.conditions.push_back(
            {id.str(), sk >= -scaled_tol(tol, s_scale[static_cast<std::size_t>(k)]),
             sk, sk});
    }

    for (int k = 1; k <= k_max; ++k) {
        for (int m = 1; m <= m_max; ++m) {
            double lhs = 1.0;
            for (int i = 0; i < m; ++i) lhs *= s[static_cast<std::size_t>(k)];
            double nm = 1.0;
            for (int i = 0; i < m - 1; ++i) nm *= n;
            const double rhs = nm * s[static_cast<std::size_t>(k) * m];
            const double margin = rhs - lhs;
            std::ostringstream id;
            id << "moment k=" << k << " m=" << m;
            report.conditions.push_back(
                {id.str(),
                 margin >= -scaled_tol(tol, std::max(std::abs(lhs), std::abs(rhs))),
                 lhs, margin});
        }
    }
    return report;
}

NecessaryReport check_diag_necessary(const Spectrum& sigma,
                                     const DiagonalList& delta, int m_max,
                                     double tol) {
    if (static_cast<int>(delta.n()) != sigma.n()) {
        throw DimensionMismatch(
            "diagonal length must equal the spectrum length");
    }
    NecessaryReport report;
    const double s1_sigma = sigma.s(1);
    const double s1_delta = delta.s(1);
    const double diff = s1_delta - s1_sigma;
    report.conditions.push_back(
        {"trace-equality",
         near_zero(diff, std::max(std::abs(s1_sigma), std::abs(s1_delta)), tol),
         s1_delta, -std::abs(diff)});

    for (int m = 2; m <= m_max; ++m) {
        const double sm_sigma = sigma.s(m);
        const double sm_delta = delta.s(m);
        const double margin = sm_sigma - sm_delta;
        std::ostringstream id;
        id << "diag-moment m=" << m;
        report.conditions.push_back(
            {id.str(),
             margin >= -scaled_tol(tol, std::max(std::abs(sm_sigma),
                                                 std::abs(sm_delta))),
             sm_delta, margin});
    }
    return report;
}

TargetPoly target_poly(const Spectrum& sigma) {
    const auto& rest = sigma.rest();
    std::vector<bool> used(rest.size(), false);
    RealPolynomial g = RealPolynomial::one();
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        if (rest[i].imag() == 0.0) {
            g = g.times_linear(rest[i].real());
            continue;
        }
        // Exact conjugate partner exists after symmetrization.
        std::size_t partner = rest.size();
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            if (!used[j] && rest[j] == std::conj(rest[i])) {
                partner = j;
                break;
            }
        }
        if (partner == rest.size()) {
            throw InternalContradiction(
                "target_poly: symmetrized spectrum has an unpaired complex "
                "entry");
        }
        used[partner] = true;
        const double re = rest[i].real();
        const double im = rest[i].imag();
        g = g.times_quadratic(-2.0 * re, re * re + im * im);
    }

    if (is_suleimanova(sigma)) {
        const double scale = g.max_abs_coefficient();
        for (int k = 0; k <= g.degree(); ++k) {
            if (g.c(k) < -scaled_tol(kDefaultTolerance, scale)) {
                throw InternalContradiction(
                    "target_poly: negative coefficient for a spectrum with "
                    "nonpositive real parts");
            }
        }
    }
    return {g, g.times_linear(sigma.rho())};
}

}  // namespace niep
