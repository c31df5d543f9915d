// Small numerical toolbox: bracketed bisection, golden-section minimization,
// and tanh-sinh (double-exponential) quadrature.  Everything here is
// deterministic and self-contained.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "symcap/errors.hpp"

namespace symcap {

/// Absolute tolerance / iteration cap for the bracketed bisections used by
/// gauge evaluation and curve membership.
struct BisectOptions {
    double abs_tol = 1e-12;
    int max_iter = 200;
};

/// Largest t in [lo, hi] with pred(t) true, assuming pred is true on a prefix
/// [lo, t*) and false after.  pred(lo) must hold; pred(hi) must not.
template <typename Pred>
double bisect_last_true(Pred&& pred, double lo, double hi, BisectOptions opt = {}) {
    for (int i = 0; i < opt.max_iter && (hi - lo) > opt.abs_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Root of the increasing function f on [lo, hi] with f(lo) <= 0 <= f(hi).
template <typename F>
double bisect_increasing(F&& f, double lo, double hi, BisectOptions opt = {}) {
    for (int i = 0; i < opt.max_iter && (hi - lo) > opt.abs_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Golden-section minimization of a unimodal f on [a, b]; returns the
/// abscissa of the minimum to absolute tolerance tol.
template <typename F>
double golden_min(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
    constexpr double invphi = 0.6180339887498948482;  // 1/phi
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

/// Configuration of the tanh-sinh quadrature: convergence is declared when
/// two consecutive level sums differ by at most abs_tol.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_levels = 12;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // conservative bound: last inter-level difference
    int levels = 0;
    bool converged = false;
};

/// Tanh-sinh quadrature of f over [a, b].  The integrand is called as
/// f(x, dist_a, dist_b) where dist_a = x - a and dist_b = b - x are computed
/// without cancellation, so integrands with endpoint singularities (or
/// square-root vanishing) can be evaluated stably arbitrarily close to the
/// endpoints.
template <typename F>
QuadratureResult integrate_tanh_sinh(F&& f, double a, double b, QuadratureConfig cfg = {}) {
    constexpr double kHalfPi = 1.5707963267948966192;
    constexpr double kTMax = 4.0;  // |u| within ~1e-120 of 1 at the last node

    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    if (!(half > 0.0)) return {0.0, 0.0, 0, true};

    // Contribution of the node pair at +-t (t > 0), or the single node t = 0.
    auto node_sum = [&](double t) -> double {
        if (t == 0.0) return kHalfPi * f(mid, half, half);
        const double s = kHalfPi * std::sinh(t);
        const double e2s = std::exp(-2.0 * s);
        const double one_minus_u = 2.0 * e2s / (1.0 + e2s);   // 1 - tanh(s)
        const double one_plus_u = 2.0 / (1.0 + e2s);          // 1 + tanh(s)
        // weight = (pi/2) cosh(t) / cosh(s)^2, written overflow-free
        const double sech = 2.0 * std::exp(-s) / (1.0 + e2s);  // 1/cosh(s)
        const double w = kHalfPi * std::cosh(t) * sech * sech;
        if (w == 0.0) return 0.0;
        const double dnear = half * one_minus_u;  // distance to the nearer endpoint
        const double dfar = half * one_plus_u;
        // node near a, then node near b; abscissas anchored at the endpoints
        return w * (f(a + dnear, dnear, dfar) + f(b - dnear, dfar, dnear));
    };

    double h = 1.0;
    double sum = node_sum(0.0);
    for (double t = h; t <= kTMax; t += h) sum += node_sum(t);
    double value = sum * h * half;

    QuadratureResult res;
    res.levels = 1;
    double prev = value;
    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        for (double t = h; t <= kTMax; t += 2.0 * h) sum += node_sum(t);
        value = sum * h * half;
        res.levels = level + 1;
        const double diff = std::abs(value - prev);
        if (level >= 2 && diff <= cfg.abs_tol) {
            res.value = value;
            res.error_estimate = std::max(diff, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value));
            res.converged = true;
            return res;
        }
        prev = value;
    }
    res.value = value;
    res.error_estimate = std::abs(value - prev);
    res.converged = false;
    return res;
}

}  // namespace symcap
