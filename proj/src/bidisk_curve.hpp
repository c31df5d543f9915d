// The named "bidisk" boundary curve at unit scale:
//   gamma(alpha) = 2*(sin a - a cos a, sin a + (pi - a) cos a), alpha in [0, pi],
// with x strictly increasing 0 -> 2*pi, y strictly decreasing 2*pi -> 0,
// gamma' = 2*(a sin a, -(pi - a) sin a), and gamma(pi/2) = (2, 2).
// Internal header shared by the region and products translation units.
#pragma once

#include <cmath>

#include "symcap/numerics.hpp"

namespace symcap::detail {

inline constexpr double kPi = 3.14159265358979323846;

inline double curve_x(double a) { return 2.0 * (std::sin(a) - a * std::cos(a)); }
inline double curve_y(double a) { return 2.0 * (std::sin(a) + (kPi - a) * std::cos(a)); }
inline double curve_x_end() { return 2.0 * kPi; }

/// alpha with curve_x(alpha) = a, for a in [0, 2*pi]; bisection on the
/// monotone parametrization.
inline double curve_alpha_at_x(double a) {
    return bisect_increasing([a](double t) { return curve_x(t) - a; }, 0.0, kPi, {1e-12, 200});
}

}  // namespace symcap::detail
