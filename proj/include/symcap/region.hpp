// Bounded open regions in the closed positive orthant of R^n, presented in a
// handful of concrete forms.  Every region here models the positive part of a
// bounded balanced open set: it is star-shaped about the origin and closed
// under shrinking any coordinate toward zero (if x lies in the region, so
// does the whole axis-aligned box [0,x]).  Membership treats the outer
// boundary as outside; points on the coordinate hyperplanes are interior in
// the relative topology of the orthant and are treated as inside.
//
// The central primitive is the radial gauge  g(u) = sup{ t >= 0 : t*u in R },
// from which membership, scaling, capacities and inclusion tests all derive.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "symcap/errors.hpp"

namespace symcap {

/// Default absolute tolerance around the boundary: points whose margin to the
/// boundary is below this are classified as boundary rather than in/out.
inline constexpr double kBoundaryTol = 1e-9;

/// Structural properties a region may claim.  Claims are validated by
/// sampling (validate_flags); operations that need a property refuse to run
/// when it is not claimed.
struct Flags {
    bool balanced = false;   // positive part of a bounded balanced set (box-closed)
    bool symmetric = false;  // invariant under coordinate permutations
    bool convex = false;
    bool concave = false;    // complement within the orthant is convex
};

/// L^p ball restricted to the orthant: { x >= 0 : ||x||_p < radius },
/// p in [1, inf].  p = infinity means the max norm.
struct LpBall {
    double p = 2.0;
    double radius = 1.0;
};

/// Axis-aligned open box [0, a_1) x ... x [0, a_n).
struct Box {
    std::vector<double> half_widths;
};

/// Named boundary curves for MonotoneBoundary2D.
enum class CurveId { bidisk };

/// Planar region bounded by the axes and a parametric curve
/// (x(alpha), y(alpha)), alpha in [0, alpha_max], with x strictly increasing
/// and y strictly decreasing, scaled by a positive factor.
///
/// The one named curve, "bidisk", is the boundary of the toric moment image
/// of the lagrangian product of two round disks:
///   gamma(alpha) = 2*(sin a - a cos a, sin a + (pi - a) cos a),  a in [0, pi],
/// running from (0, 2*pi) to (2*pi, 0) through (2, 2) at a = pi/2.
struct MonotoneBoundary2D {
    CurveId curve = CurveId::bidisk;
    double scale = 1.0;
};

/// Sampled radial gauge for a planar region: values[i] is the gauge along the
/// direction (1 - fractions[i], fractions[i]); in between, the gauge is
/// interpolated piecewise-linearly in the simplex coordinate.  An approximate
/// presentation intended as an interchange/extension point.
struct GaugeTable {
    std::vector<double> fractions;  // strictly increasing, first 0, last 1
    std::vector<double> values;     // positive, same length
};

using Kind = std::variant<LpBall, Box, MonotoneBoundary2D, GaugeTable>;

/// Where a point sits relative to the region, at a given absolute tolerance.
enum class Side { inside, boundary, outside };

/// A direction in the closed positive orthant: componentwise >= 0, not all
/// zero.  The tag records whether components were normalized to sum 1.
struct Direction {
    std::vector<double> components;
    bool simplex_normalized = false;

    /// Validating constructor; normalizes to the simplex when requested.
    static Direction simplex(std::vector<double> components);
    static Direction raw(std::vector<double> components);
};

class Region {
  public:
    /// Validates structural invariants of the presentation (dimensions,
    /// parameter ranges); throws InputError on violation.
    Region(int dim, Kind kind, Flags flags);

    int dim() const { return dim_; }
    const Kind& kind() const { return kind_; }
    const Flags& flags() const { return flags_; }

    /// Open-region membership (boundary counts as outside).
    bool contains(std::span<const double> point) const;

    /// Three-way membership with an absolute boundary tolerance.
    Side classify(std::span<const double> point, double tol = kBoundaryTol) const;

    /// Radial gauge sup{ t : t*u in region } along a direction with
    /// nonnegative components, not all zero.  Homogeneous of degree -1 in u.
    /// Closed form for LpBall/Box, table interpolation for GaugeTable,
    /// bracketed bisection on the membership predicate otherwise.
    double gauge(std::span<const double> direction) const;
    double gauge(const Direction& direction) const;

    /// Upper bound on the absolute numerical error of gauge() for this kind
    /// (0 for closed forms, the bisection tolerance otherwise).
    double gauge_error_bound() const;

    /// Axis gauges (gauge along each coordinate direction); the region lies
    /// inside the open box they span.
    std::vector<double> axis_extents() const;

    /// The region dilated by factor > 0 (gauge scales by the same factor).
    Region scaled(double factor) const;

    /// Schema: {"dim": n, "kind": {"type": ...}, "flags": [...]}.  See
    /// README for the per-kind fields.  Infinite p is serialized as "inf".
    static Region from_json(const nlohmann::json& j);
    static Region from_json_text(const std::string& text);
    nlohmann::json to_json() const;

  private:
    int dim_;
    Kind kind_;
    Flags flags_;
};

// ---------------------------------------------------------------------------
// Inclusion test

enum class InclusionStatus { included, not_included, inconclusive };

/// Outcome of the semidecision `inner included in outer`.
///
/// Decided by gauge dominance over a deterministic low-discrepancy grid of
/// simplex directions with local refinement around the worst margin, where
/// margin(u) = gauge_outer(u) - gauge_inner(u):
///   - included:     refined minimum margin >= -(combined gauge error bound);
///                   boundary touching counts as inclusion of open regions.
///   - not_included: some margin < -tol, certified by a witness point that
///                   membership confirms lies in inner but not in outer.
///   - inconclusive: minimum margin in the band [-tol, -error_bound), or the
///                   witness could not be confirmed.
/// The test samples directions, so inclusion violations confined to an
/// unsampled sliver can in principle be missed; refinement makes that
/// unlikely for the smooth boundaries handled here.
struct InclusionResult {
    InclusionStatus status = InclusionStatus::inconclusive;
    double min_margin = 0.0;
    std::vector<double> worst_direction;  // simplex direction attaining min_margin
    std::vector<double> witness;          // non-empty iff not_included
    double error_bound = 0.0;             // combined gauge error of the two regions
    int grid_size = 0;
};

struct InclusionOptions {
    double tol = 1e-9;  // margin below -tol => not_included (with witness)
    int grid_size = 0;  // simplex directions sampled; 0 means 512 * dim
};

InclusionResult includes(const Region& inner, const Region& outer, InclusionOptions opt = {});

// ---------------------------------------------------------------------------
// Flag validation

struct FlagCheck {
    std::string flag;
    bool claimed = false;
    bool passed = true;  // vacuously true when not claimed
    int samples = 0;
    std::vector<std::vector<double>> counterexample;  // offending point(s)
    std::string note;
};

struct ValidationReport {
    std::vector<FlagCheck> checks;
    bool all_passed() const;
};

struct ValidationOptions {
    int samples = 2048;
    std::uint64_t seed = 0x5eedULL;
    double tol = kBoundaryTol;  // skip samples within this band of the boundary
};

/// Sampled validation of the claimed flags.  Each claimed flag is probed with
/// deterministic pseudo-random points; a failure is reported together with a
/// concrete counterexample.  Passing is evidence, not proof.
ValidationReport validate_flags(const Region& region, ValidationOptions opt = {});

// ---------------------------------------------------------------------------
// Direction grids (shared by the inclusion test and the capacity module)

/// Deterministic low-discrepancy grid of simplex directions (components sum
/// to 1): a Kronecker/R_d sequence mapped to the simplex, plus the vertices,
/// edge midpoints and the centroid.  size = 0 means 512 * dim.
std::vector<std::vector<double>> simplex_grid(int dim, int size = 0);

/// Minimize a function of a simplex direction: coarse grid scan followed by
/// local refinement (golden-section for dim 2, compass search otherwise).
/// Returns the refined minimizer and value.
struct SimplexMin {
    std::vector<double> direction;
    double value = 0.0;
};
SimplexMin minimize_on_simplex(int dim, const std::function<double(std::span<const double>)>& f,
                               int grid_size = 0);

}  // namespace symcap
