#include "symcap/capacity.hpp"

#include <algorithm>
#include <cmath>

namespace symcap {

namespace {

/// Sample budget of the cheap pre-flight flag validation.
constexpr int kSpotCheckSamples = 256;

/// Allowance added to generic-path error bounds for the residual of the
/// minimum search (grid + local refinement).
constexpr double kRefineAllowance = 1e-9;

void require_convex_or_concave(const Region& region, const CapacityOptions& opt) {
    const Flags& f = region.flags();
    if (!f.convex && !f.concave)
        throw DomainError(
            "capacity: region claims neither convex nor concave; "
            "capacities are only computed for validated convex/concave regions");
    if (opt.spot_check_flags) {
        ValidationOptions v;
        v.samples = kSpotCheckSamples;
        v.seed = opt.seed;
        const auto report = validate_flags(region, v);
        for (const auto& c : report.checks)
            if (!c.passed)
                throw DomainError("capacity: claimed flag '" + c.flag +
                                  "' failed sampled validation (" + c.note + ")");
    }
}

bool has_closed_form(const Region& region) {
    return std::holds_alternative<LpBall>(region.kind()) ||
           std::holds_alternative<Box>(region.kind());
}

double min_half_width(const Box& b) {
    return *std::min_element(b.half_widths.begin(), b.half_widths.end());
}

}  // namespace

CapacityValue gromov_width(const Region& region, CapacityOptions opt) {
    require_convex_or_concave(region, opt);

    if (opt.prefer_closed_form && has_closed_form(region)) {
        if (const auto* b = std::get_if<LpBall>(&region.kind()))
            return {b->radius, CapacityMethod::closed_form, 0.0};
        return {min_half_width(std::get<Box>(region.kind())), CapacityMethod::closed_form, 0.0};
    }

    const int dim = region.dim();
    if (region.flags().convex) {
        // the largest simplex scaling that fits a convex region is pinned by
        // the axis directions alone
        double c1 = std::numeric_limits<double>::infinity();
        std::vector<double> axis(dim, 0.0);
        for (int i = 0; i < dim; ++i) {
            axis.assign(dim, 0.0);
            axis[i] = 1.0;
            c1 = std::min(c1, region.gauge(axis));
        }
        return {c1, CapacityMethod::simplex_min_gauge,
                region.gauge_error_bound() + kRefineAllowance};
    }

    // concave: full minimum of the gauge over simplex directions; a symmetric
    // region is searched through the sorted-direction representative
    const bool symmetric = region.flags().symmetric;
    std::vector<double> scratch(dim);
    auto objective = [&](std::span<const double> u) {
        if (!symmetric) return region.gauge(u);
        scratch.assign(u.begin(), u.end());
        std::sort(scratch.begin(), scratch.end());
        return region.gauge(scratch);
    };
    const SimplexMin m = minimize_on_simplex(dim, objective, opt.grid_size);
    return {m.value, CapacityMethod::simplex_min_gauge,
            region.gauge_error_bound() + kRefineAllowance};
}

CapacityValue cube_capacity(const Region& region, CapacityOptions opt) {
    require_convex_or_concave(region, opt);

    if (opt.prefer_closed_form && has_closed_form(region)) {
        if (const auto* b = std::get_if<LpBall>(&region.kind())) {
            const double n_root = std::isinf(b->p)
                                      ? 1.0
                                      : std::pow(static_cast<double>(region.dim()), -1.0 / b->p);
            return {b->radius * n_root, CapacityMethod::closed_form, 0.0};
        }
        return {min_half_width(std::get<Box>(region.kind())), CapacityMethod::closed_form, 0.0};
    }

    const std::vector<double> diag(region.dim(), 1.0);
    return {region.gauge(diag), CapacityMethod::diagonal_gauge, region.gauge_error_bound()};
}

CapacityReport capacity_report(const Region& region, CapacityOptions opt) {
    const CapacityValue c1 = gromov_width(region, opt);
    opt.spot_check_flags = false;  // already checked once
    const CapacityValue ci = cube_capacity(region, opt);
    CapacityReport r;
    r.c1 = c1.value;
    r.c_infinity = ci.value;
    r.method = std::max(c1.method, ci.method);
    r.error_bound = std::max(c1.error_bound, ci.error_bound);
    return r;
}

std::optional<CapacityObstruction> capacity_monotonicity_certificate(const Region& inner,
                                                                     const Region& outer,
                                                                     CapacityOptions opt) {
    const CapacityReport a = capacity_report(inner, opt);
    const CapacityReport b = capacity_report(outer, opt);
    const double err = a.error_bound + b.error_bound;
    if (a.c1 > b.c1 + err)
        return CapacityObstruction{"c1", a.c1, b.c1, a.c1 - b.c1 - err};
    if (a.c_infinity > b.c_infinity + err)
        return CapacityObstruction{"c_infinity", a.c_infinity, b.c_infinity,
                                   a.c_infinity - b.c_infinity - err};
    return std::nullopt;
}

}  // namespace symcap
