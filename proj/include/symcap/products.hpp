// Lagrangian products of planar L^p disks: equivalence of product
// presentations, the rigid/flexible classification over the exponent family
// {1, 2, inf}, and the bidisk moment region with its optimal scalings.
#pragma once

#include <vector>

#include "symcap/capacity.hpp"
#include "symcap/region.hpp"

namespace symcap {

/// Planar L^p disk of the given radius, p in [1, inf].
struct Disk2Spec {
    double p = 2.0;
    double radius = 1.0;
};

/// Lagrangian product first x second of two planar disks.
struct ProductSpec {
    Disk2Spec first;
    Disk2Spec second;
};

/// Moment region of the product of two round unit disks, optionally scaled:
/// the MonotoneBoundary2D region over the named "bidisk" curve.
Region bidisk_region(double scale = 1.0);

/// Equivalence of products: P1 ~ P2 when a common rotation U and factor a > 0
/// turn P2 into P1 with the first factor scaled by a and the second by 1/a,
/// allowing the two factors to swap roles.  Within the L^p disk family a
/// rotation can match factors only in three ways -- any rotation between
/// round disks, quarter-turn multiples between equal exponents, and odd
/// eighth-turns between the diamond (p=1) and the square (p=inf), which also
/// forces the sqrt(2) radius conversion.  The decision reduces to that
/// finite case analysis.
bool equivalent(const ProductSpec& a, const ProductSpec& b, double rel_tol = 1e-12);

enum class Rigidity { rigid, not_rigid };

/// Rigidity of the ordered pair of disk products (B_p x B_q, B_r x B_s) over
/// the exponent family {1, 2, inf}: rigid when a symplectic embedding between
/// the associated toric domains exists only at scales where the factors
/// already include into each other.  Exactly four exponent tuples are
/// flexible: (1,inf,2,2), (inf,1,2,2), (2,2,1,inf), (2,2,inf,1).
Rigidity rigidity_classify(double p, double q, double r, double s);

struct RigidityRow {
    double p, q, r, s;
    Rigidity verdict;
};

/// All 81 exponent tuples in lexicographic order (1 < 2 < inf).
std::vector<RigidityRow> rigidity_table();

/// The numerical facts behind the four flexible tuples, recomputed:
///   - the quadruple simplex region sits inside the bidisk region (touching
///     along the diagonal), so the bidisk product admits a simplex-sized
///     embedding target of matched capacity;
///   - covering the round disk by scaled diamond/square factors costs
///     a >= sqrt(2), b >= 1 with a*b = sqrt(2), strictly above the known
///     optimal simplex-target embedding factor 3*sqrt(3)/4 ~ 1.299 (an
///     external constant, trusted not recomputed), so the embedding beats
///     every product inclusion;
///   - conversely diamond/square factors cover the round disk at cost
///     a >= 1, b >= sqrt(2) with a*b = sqrt(2) > 1, again beating inclusion.
struct NonrigidityWitnesses {
    InclusionResult quad_simplex_in_bidisk;  // 4 * unit simplex region inside bidisk region
    double diamond_in_round = 0.0;           // min a: p=1 disk inside a * round disk  (1)
    double square_in_round = 0.0;            // min b: p=inf disk inside b * round disk (sqrt 2)
    double round_cover_product = 0.0;        // product of the two above
    double round_in_diamond = 0.0;           // min a: round disk inside a * p=1 disk (sqrt 2)
    double round_in_square = 0.0;            // min b: round disk inside b * p=inf disk (1)
    double inclusion_cost = 0.0;             // product of the two above  (sqrt 2)
    double flexible_embedding_factor = 0.0;  // 3*sqrt(3)/4, trusted external constant
    bool strict_gap = false;                 // inclusion_cost > flexible_embedding_factor
};

NonrigidityWitnesses nonrigidity_witnesses(InclusionOptions opt = {});

/// Optimal scalings between the product of round disks and the product of a
/// square with an L^p disk, p in [2, inf]: embedding into the polydisk is
/// optimal at scale 1, embedding the polydisk back costs 2 / 2^(1/p).
struct BidiskScales {
    double into_polydisk = 0.0;
    double from_polydisk = 0.0;
};

BidiskScales bidisk_optimal_scales(double p);

/// Points of the bidisk boundary curve at n+1 equispaced parameter values in
/// [0, pi] (used by the CSV export).
struct CurveSample {
    double alpha, x, y;
};
std::vector<CurveSample> bidisk_curve_samples(int n);

}  // namespace symcap
