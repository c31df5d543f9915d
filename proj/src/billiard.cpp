#include "symcap/billiard.hpp"

#include <cmath>
#include <sstream>

namespace symcap {

namespace {

/// Energies within this distance of the minimum eps/2 are treated as the
/// minimum itself (zero orbit, zero action).
constexpr double kEnergyFloorTol = 1e-12;

void check_params(const BilliardParams& p) {
    if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon))
        throw InputError("billiard: epsilon must be positive and finite");
}

void check_position(double x) {
    if (!(std::abs(x) < 1.0)) throw DomainError("billiard: position must satisfy |x| < 1");
}

}  // namespace

double hamiltonian(const BilliardParams& params, double x, double y) {
    check_params(params);
    check_position(x);
    if (!std::isfinite(y)) throw InputError("billiard: momentum must be finite");
    return 0.5 * (y * y + params.epsilon / ((1.0 - x) * (1.0 + x)));
}

ActionValue action(const BilliardParams& params, double c) {
    check_params(params);
    if (!std::isfinite(c)) throw InputError("billiard: energy must be finite");
    const double eps = params.epsilon;
    const double floor = 0.5 * eps;
    if (c < floor - kEnergyFloorTol)
        throw DomainError("billiard: energy below the minimum eps/2 of the Hamiltonian");
    if (c - floor < kEnergyFloorTol) return {0.0, 0.0};

    // I(c) = 4 * integral_0^b sqrt(2c - eps/(1-x^2)) dx,  b = sqrt(1 - eps/(2c)).
    // The radicand rewrites as 2c (b-x)(b+x) / ((1-x)(1+x)), which the
    // quadrature evaluates through the distance db = b - x without
    // cancellation; 1 - x = (1 - b) + db with 1 - b = beta/(1 + b).
    const double two_c = 2.0 * c;
    const double beta = eps / two_c;
    const double b = std::sqrt((two_c - eps) / two_c);
    const double one_minus_b = beta / (1.0 + b);
    auto integrand = [&](double /*x*/, double /*da*/, double db) {
        const double q = one_minus_b + db;  // 1 - x
        const double val = two_c * db * (2.0 * b - db) / (q * (2.0 - q));
        return std::sqrt(std::max(val, 0.0));
    };
    const QuadratureResult quad = integrate_tanh_sinh(integrand, 0.0, b, params.quadrature);
    if (!quad.converged) {
        std::ostringstream msg;
        msg << "billiard action quadrature did not converge: eps=" << eps << " c=" << c
            << " levels=" << quad.levels << " last_diff=" << quad.error_estimate;
        throw NumericError(msg.str());
    }
    return {4.0 * quad.value, 4.0 * quad.error_estimate};
}

double action_limit(double c) {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw DomainError("billiard: limit action needs energy >= 0");
    return 4.0 * std::sqrt(2.0 * c);
}

double action_inverse(const BilliardParams& params, double a) {
    check_params(params);
    if (!(a >= 0.0) || !std::isfinite(a))
        throw DomainError("billiard: action must be >= 0");
    const double floor = 0.5 * params.epsilon;
    if (a == 0.0) return floor;

    // bracket: seed from the limit profile a = 4*sqrt(2c), expand upward
    double hi = floor + std::max(a * a / 32.0, 1e-8);
    int expansions = 0;
    while (action(params, hi).value < a) {
        hi = floor + 2.0 * (hi - floor);
        if (++expansions > 200) throw NumericError("billiard: action bracket expansion failed");
    }
    auto fn = [&](double c) { return action(params, c).value - a; };
    return bisect_increasing(fn, floor, hi, {1e-13 * std::max(1.0, hi), 200});
}

std::vector<double> moment_map_phi(const BilliardParams& params, std::span<const double> x,
                                   std::span<const double> y) {
    if (x.size() != y.size()) throw InputError("moment_map: position/momentum length mismatch");
    std::vector<double> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = hamiltonian(params, x[i], y[i]);
    return out;
}

std::vector<double> torus_action_image(const BilliardParams& params, std::span<const double> c) {
    std::vector<double> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = action(params, c[i]).value;
    return out;
}

bool p_epsilon_contains(const Region& A, double epsilon, std::span<const double> x,
                        std::span<const double> y) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InputError("p_epsilon_contains: epsilon must be positive and finite");
    if (!A.flags().balanced)
        throw DomainError("p_epsilon_contains: factor region must claim the balanced flag");
    const size_t n = static_cast<size_t>(A.dim());
    if (x.size() != n || y.size() != n)
        throw InputError("p_epsilon_contains: point dimension mismatch");
    // limit-action image of the componentwise Hamiltonian, tested against the
    // dilated factor region
    std::vector<double> v(n);
    for (size_t i = 0; i < n; ++i) {
        check_position(x[i]);
        v[i] = 4.0 * std::sqrt(y[i] * y[i] + epsilon / ((1.0 - x[i]) * (1.0 + x[i])));
    }
    return A.scaled(4.0).contains(v);
}

ActionProfile action_profile(const BilliardParams& params, std::span<const double> cs) {
    check_params(params);
    ActionProfile p;
    p.epsilon = params.epsilon;
    p.samples.reserve(cs.size());
    for (double c : cs) {
        const ActionValue v = action(params, c);
        p.samples.push_back({c, v.value, v.error_estimate});
    }
    return p;
}

ActionProfile action_limit_profile(std::span<const double> cs) {
    ActionProfile p;
    p.epsilon = 0.0;
    p.samples.reserve(cs.size());
    for (double c : cs) p.samples.push_back({c, action_limit(c), 0.0});
    return p;
}

}  // namespace symcap
