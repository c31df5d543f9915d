// Symplectic embedding decisions for toric domains over orthant regions.
//
// For four families of (source, target) pairs, existence of a symplectic
// embedding of the toric domains is equivalent to inclusion of the regions:
//   (i)   source is a scaled unit simplex or cube region, target convex or
//         concave;
//   (ii)  source convex and symmetric, target a scaled simplex/cube region;
//   (iii) source convex and symmetric, target concave and symmetric;
//   (iv)  both L^p balls.
// Inside a matching case the verdict is exactly the inclusion test; outside,
// only one-directional facts are available (a capacity obstruction disproves
// embedding unconditionally) and the decision is out of scope.
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "symcap/capacity.hpp"
#include "symcap/region.hpp"

namespace symcap {

enum class TheoremCase { i, ii, iii, iv, none };

enum class EmbedAnswer { embeds, not_embeds, out_of_scope };

/// Inclusion evidence backing an Embeds / NotEmbeds verdict, together with
/// the scale by which the pair was normalized during case matching.
struct InclusionCertificate {
    InclusionResult inclusion;
    double normalization = 1.0;
};

/// Why no confident verdict was produced; may still carry an unconditional
/// capacity obstruction (embedding impossible even though the equivalence
/// framework does not apply).
struct ScopeExplanation {
    std::string message;
    std::optional<CapacityObstruction> obstruction;
};

struct EmbedVerdict {
    EmbedAnswer verdict = EmbedAnswer::out_of_scope;
    TheoremCase case_used = TheoremCase::none;
    std::variant<InclusionCertificate, CapacityObstruction, ScopeExplanation> certificate;
};

struct EmbedOptions {
    double tol = 1e-9;  // inclusion tolerance
    int grid_size = 0;
    bool spot_check_flags = true;
    std::uint64_t seed = 0x5eedULL;
};

/// First matching case in the order i, ii, iii, iv; none otherwise.  Scaled
/// unit shapes are recognized up to a positive factor (the pair may be
/// normalized conformally without changing either side of the equivalence).
TheoremCase classify_case(const Region& source, const Region& target);

/// Decides `toric domain over source embeds into toric domain over target`.
///   - matching case + inclusion decided  -> Embeds / NotEmbeds with evidence
///     (NotEmbeds prefers a capacity obstruction as certificate when one
///     exists, else the inclusion witness);
///   - matching case + inclusion inconclusive -> out_of_scope refusal, never
///     a guessed verdict;
///   - no matching case -> out_of_scope, attaching any capacity obstruction
///     found (an unconditional impossibility fact).
EmbedVerdict decide_embedding(const Region& source, const Region& target, EmbedOptions opt = {});

/// Minimal r such that the unit L^p ball region in R^n is included in r times
/// the unit L^q ball region: 1 for p <= q, n^(1/q - 1/p) for q <= p (sharp by
/// the Holder inequality; 1/inf = 0).
double holder_min_scale(int n, double p, double q);

/// Moment-image region of a lagrangian product with the given balanced factor
/// profile: the factor region dilated by 4.  Requires the balanced flag.
Region lagrangian_to_toric(const Region& balanced_factor);

}  // namespace symcap
