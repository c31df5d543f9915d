#include "symcap/embed.hpp"

#include <cmath>
#include <sstream>

namespace symcap {

namespace {

constexpr int kSpotCheckSamples = 256;

/// Scaled copy of the unit simplex or cube region: an L^1 or L^inf ball of
/// any radius, or a box with equal half-widths.  Returns the scale factor.
struct UnitFamily {
    double scale = 1.0;
    bool is_cube = false;
};

std::optional<UnitFamily> unit_family(const Region& region) {
    if (const auto* b = std::get_if<LpBall>(&region.kind())) {
        if (b->p == 1.0) return UnitFamily{b->radius, false};
        if (std::isinf(b->p)) return UnitFamily{b->radius, true};
        return std::nullopt;
    }
    if (const auto* b = std::get_if<Box>(&region.kind())) {
        const double a0 = b->half_widths.front();
        for (double a : b->half_widths)
            if (a != a0) return std::nullopt;
        return UnitFamily{a0, true};
    }
    return std::nullopt;
}

void spot_check(const Region& region, const EmbedOptions& opt, const char* role) {
    ValidationOptions v;
    v.samples = kSpotCheckSamples;
    v.seed = opt.seed;
    const auto report = validate_flags(region, v);
    for (const auto& c : report.checks)
        if (!c.passed)
            throw DomainError(std::string("embed: ") + role + " region's claimed flag '" + c.flag +
                              "' failed sampled validation (" + c.note + ")");
}

std::optional<CapacityObstruction> try_obstruction(const Region& source, const Region& target,
                                                   const EmbedOptions& opt) {
    CapacityOptions c;
    c.grid_size = opt.grid_size;
    c.spot_check_flags = false;  // caller has already validated
    c.seed = opt.seed;
    try {
        return capacity_monotonicity_certificate(source, target, c);
    } catch (const DomainError&) {
        return std::nullopt;  // capacities unavailable for these flags
    }
}

}  // namespace

TheoremCase classify_case(const Region& source, const Region& target) {
    if (source.dim() != target.dim()) throw InputError("embed: dimension mismatch");
    const Flags& sf = source.flags();
    const Flags& tf = target.flags();

    if (unit_family(source) && (tf.convex || tf.concave)) return TheoremCase::i;
    if (sf.convex && sf.symmetric && unit_family(target)) return TheoremCase::ii;
    if (sf.convex && sf.symmetric && tf.concave && tf.symmetric) return TheoremCase::iii;
    if (std::holds_alternative<LpBall>(source.kind()) &&
        std::holds_alternative<LpBall>(target.kind()))
        return TheoremCase::iv;
    return TheoremCase::none;
}

EmbedVerdict decide_embedding(const Region& source, const Region& target, EmbedOptions opt) {
    if (source.dim() != target.dim()) throw InputError("embed: dimension mismatch");
    if (opt.spot_check_flags) {
        spot_check(source, opt, "source");
        spot_check(target, opt, "target");
    }

    const TheoremCase c = classify_case(source, target);
    EmbedVerdict v;
    v.case_used = c;

    if (c == TheoremCase::none) {
        ScopeExplanation ex;
        ex.obstruction = try_obstruction(source, target, opt);
        std::ostringstream msg;
        msg << "pair matches no embedding-equivalence case; ";
        if (ex.obstruction)
            msg << "a capacity obstruction (" << ex.obstruction->capacity
                << ") shows the embedding is impossible regardless";
        else
            msg << "no capacity obstruction found, existence stays undecided here";
        ex.message = msg.str();
        v.verdict = EmbedAnswer::out_of_scope;
        v.certificate = std::move(ex);
        return v;
    }

    // normalization used during case matching (conformal scaling of the pair)
    double normalization = 1.0;
    if (c == TheoremCase::i)
        normalization = unit_family(source)->scale;
    else if (c == TheoremCase::ii)
        normalization = unit_family(target)->scale;
    else if (c == TheoremCase::iv)
        normalization = std::get<LpBall>(source.kind()).radius;

    InclusionOptions io;
    io.tol = opt.tol;
    io.grid_size = opt.grid_size;
    const InclusionResult inc = includes(source, target, io);

    switch (inc.status) {
        case InclusionStatus::included:
            v.verdict = EmbedAnswer::embeds;
            v.certificate = InclusionCertificate{inc, normalization};
            return v;
        case InclusionStatus::not_included: {
            v.verdict = EmbedAnswer::not_embeds;
            if (auto obs = try_obstruction(source, target, opt)) {
                v.certificate = *obs;  // the stronger, unconditional fact
            } else {
                v.certificate = InclusionCertificate{inc, normalization};
            }
            return v;
        }
        case InclusionStatus::inconclusive:
            break;
    }
    ScopeExplanation ex;
    std::ostringstream msg;
    msg << "inclusion test inconclusive (minimum margin " << inc.min_margin
        << " within tolerance " << io.tol << "); refusing to guess a verdict";
    ex.message = msg.str();
    v.verdict = EmbedAnswer::out_of_scope;
    v.certificate = std::move(ex);
    return v;
}

double holder_min_scale(int n, double p, double q) {
    if (n < 1) throw InputError("holder_min_scale: n must be >= 1");
    if (!(p >= 1.0) || !(q >= 1.0))
        throw InputError("holder_min_scale: exponents must be in [1, inf]");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    const double e = std::max(0.0, inv_q - inv_p);
    return std::pow(static_cast<double>(n), e);
}

Region lagrangian_to_toric(const Region& balanced_factor) {
    if (!balanced_factor.flags().balanced)
        throw DomainError("lagrangian_to_toric: factor region must claim the balanced flag");
    ValidationOptions v;
    v.samples = kSpotCheckSamples;
    const auto report = validate_flags(balanced_factor, v);
    for (const auto& c : report.checks)
        if (!c.passed)
            throw DomainError("lagrangian_to_toric: claimed flag '" + c.flag +
                              "' failed sampled validation");
    return balanced_factor.scaled(4.0);
}

}  // namespace symcap
