// Integrable billiard-like system on the open strip |x| < 1:
//   H_eps(x, y) = (y^2 + eps / (1 - x^2)) / 2,   eps > 0,
// a double-well-free confining Hamiltonian whose level sets {H = c} are
// closed curves for c > eps/2 (the minimum, attained at the origin only).
// The action of the level-c orbit is the enclosed phase-space area
//   I_eps(c) = 4 * integral_0^b sqrt(2c - eps/(1 - x^2)) dx,
//   b = sqrt(1 - eps/(2c)),
// strictly increasing in c, strictly decreasing in eps, with pointwise limit
// I_0(c) = 4*sqrt(2c) as eps -> 0 (uniform on compact c-ranges).
#pragma once

#include <span>
#include <vector>

#include "symcap/numerics.hpp"
#include "symcap/region.hpp"

namespace symcap {

struct BilliardParams {
    double epsilon = 1.0;  // > 0
    QuadratureConfig quadrature;
};

/// Action value with a conservative absolute error bound from the quadrature.
struct ActionValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// H_eps(x, y); requires |x| < 1.
double hamiltonian(const BilliardParams& params, double x, double y);

/// Action I_eps(c) of the energy-c level set, by tanh-sinh quadrature.
/// c must satisfy c >= eps/2; values within 1e-12 of the minimum return 0.
ActionValue action(const BilliardParams& params, double c);

/// Pointwise limit of the action as eps -> 0: I_0(c) = 4*sqrt(2c), c >= 0.
double action_limit(double c);

/// Inverse of c -> I_eps(c): the energy whose orbit has the given action.
/// a must be >= 0; a = 0 maps to eps/2 exactly.
double action_inverse(const BilliardParams& params, double a);

/// Componentwise Hamiltonian of a product point: (H(x_1,y_1), ..., H(x_n,y_n)).
std::vector<double> moment_map_phi(const BilliardParams& params, std::span<const double> x,
                                   std::span<const double> y);

/// Componentwise action of a vector of energies; every c_i must be >= eps/2.
std::vector<double> torus_action_image(const BilliardParams& params, std::span<const double> c);

/// Membership of the product point (x, y) in the eps-approximation domain of
/// the lagrangian product with balanced factor profile A: equivalent to
///   ( 4*sqrt(y_i^2 + eps/(1 - x_i^2)) )_i  in  4*A.
/// These domains shrink as eps grows and exhaust the open product as
/// eps -> 0.  Requires |x_i| < 1 for all i and A claiming balanced.
bool p_epsilon_contains(const Region& A, double epsilon, std::span<const double> x,
                        std::span<const double> y);

/// Sampled action profile of a fixed eps over a list of energies.
/// epsilon = 0 denotes the limit profile (exact, error 0).
struct ActionProfile {
    double epsilon = 0.0;
    struct Sample {
        double c = 0.0;
        double value = 0.0;
        double error = 0.0;
    };
    std::vector<Sample> samples;
};

ActionProfile action_profile(const BilliardParams& params, std::span<const double> cs);
ActionProfile action_limit_profile(std::span<const double> cs);

}  // namespace symcap
