#pragma once

#include <algorithm>
#include <cmath>

namespace niep {

/// Default tolerance for all zero/equality comparisons. Comparisons are
/// absolute-plus-relative: a quantity counts as zero when its magnitude is
/// below tol * max(1, scale), where scale is the largest magnitude involved
/// in producing it.
inline constexpr double kDefaultTolerance = 1e-9;

/// Tolerance used when matching complex spectrum entries into conjugate
/// pairs and when deciding whether an entry is real.
inline constexpr double kPairTolerance = 1e-8;

[[nodiscard]] inline double scaled_tol(double tol, double scale) {
    return tol * std::max(1.0, std::abs(scale));
}

[[nodiscard]] inline bool near_zero(double x, double scale,
                                    double tol = kDefaultTolerance) {
    return std::abs(x) <= scaled_tol(tol, scale);
}

/// True when a and b agree within tol relative to the larger magnitude
/// (absolute below tol for small values).
[[nodiscard]] inline bool near(double a, double b,
                               double tol = kDefaultTolerance) {
    return std::abs(a - b) <=
           tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace niep
