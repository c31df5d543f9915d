// Symplectic capacities of the toric domain over a region: the Gromov width
// (largest ball factor, realized as the largest open simplex scaling that
// fits in the region) and the cube capacity (largest open cube scaling).
// Monotone under inclusion and conformal under scaling.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "symcap/region.hpp"

namespace symcap {

enum class CapacityMethod { closed_form, diagonal_gauge, simplex_min_gauge };

/// One capacity value plus how it was obtained and a bound on its numerical
/// error (0 for closed forms).
struct CapacityValue {
    double value = 0.0;
    CapacityMethod method = CapacityMethod::closed_form;
    double error_bound = 0.0;
};

struct CapacityReport {
    double c1 = 0.0;          // Gromov width
    double c_infinity = 0.0;  // cube capacity
    CapacityMethod method = CapacityMethod::closed_form;  // least-closed of the two paths
    double error_bound = 0.0;                             // max of the two bounds
};

struct CapacityOptions {
    bool prefer_closed_form = true;  // false forces the generic gauge path
    int grid_size = 0;               // simplex grid for the generic minimum search
    bool spot_check_flags = true;    // cheap sampled validation of the claimed flags
    std::uint64_t seed = 0x5eedULL;
};

/// Gromov width: min over simplex directions of the radial gauge.  Requires
/// a region claiming convex or concave (refuses otherwise); convex regions
/// use the axis-direction shortcut, concave regions the full simplex search.
/// Closed forms: LpBall -> radius, Box -> min half-width.
CapacityValue gromov_width(const Region& region, CapacityOptions opt = {});

/// Cube capacity: the gauge along the diagonal direction.  Closed forms:
/// LpBall(p, r) -> r * n^(-1/p), Box -> min half-width.
CapacityValue cube_capacity(const Region& region, CapacityOptions opt = {});

CapacityReport capacity_report(const Region& region, CapacityOptions opt = {});

/// Witness that `inner included in outer` is impossible: a capacity that
/// strictly decreases from inner to outer (beyond both error bounds).
struct CapacityObstruction {
    std::string capacity;  // "c1" or "c_infinity"
    double inner_value = 0.0;
    double outer_value = 0.0;
    double slack = 0.0;  // inner - outer - combined error bound, > 0
};

/// Checks both capacities for a monotonicity violation; std::nullopt when
/// none is found (which proves nothing by itself).
std::optional<CapacityObstruction> capacity_monotonicity_certificate(const Region& inner,
                                                                     const Region& outer,
                                                                     CapacityOptions opt = {});

}  // namespace symcap
