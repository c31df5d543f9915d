#include "symcap/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symcap/numerics.hpp"
#include "bidisk_curve.hpp"

namespace symcap {

namespace {

using detail::curve_alpha_at_x;
using detail::curve_x_end;
using detail::curve_y;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Tolerance/iteration cap of the generic gauge bisection.
constexpr BisectOptions kGaugeBisect{1e-12, 200};

/// Piecewise-linear gauge of a table presentation at simplex coordinate s.
double gauge_table_interp(const GaugeTable& g, double s) {
    auto it = std::upper_bound(g.fractions.begin(), g.fractions.end(), s);
    size_t hi = std::min<size_t>(g.fractions.size() - 1,
                                 static_cast<size_t>(it - g.fractions.begin()));
    if (hi == 0) hi = 1;
    const size_t lo = hi - 1;
    const double w = (s - g.fractions[lo]) / (g.fractions[hi] - g.fractions[lo]);
    return g.values[lo] + w * (g.values[hi] - g.values[lo]);
}

// --- L^p norms, stable for large p ------------------------------------------

double norm_p(std::span<const double> x, double p) {
    double mx = 0.0;
    for (double v : x) mx = std::max(mx, v);
    if (mx == 0.0) return 0.0;
    if (std::isinf(p)) return mx;
    if (p == 1.0) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    double s = 0.0;
    for (double v : x) s += std::pow(v / mx, p);
    return mx * std::pow(s, 1.0 / p);
}

void check_point(std::span<const double> point, int dim, const char* what) {
    if (static_cast<int>(point.size()) != dim)
        throw InputError(std::string(what) + ": point dimension mismatch");
    for (double v : point)
        if (!std::isfinite(v)) throw InputError(std::string(what) + ": non-finite coordinate");
}

void check_direction(std::span<const double> u, int dim) {
    if (static_cast<int>(u.size()) != dim) throw InputError("gauge: direction dimension mismatch");
    double sum = 0.0;
    for (double v : u) {
        if (!std::isfinite(v) || v < 0.0)
            throw InputError("gauge: direction components must be finite and >= 0");
        sum += v;
    }
    if (sum <= 0.0) throw InputError("gauge: direction must be nonzero");
}

}  // namespace

// --- Direction ---------------------------------------------------------------

Direction Direction::raw(std::vector<double> components) {
    check_direction(components, static_cast<int>(components.size()));
    return Direction{std::move(components), false};
}

Direction Direction::simplex(std::vector<double> components) {
    check_direction(components, static_cast<int>(components.size()));
    double sum = 0.0;
    for (double v : components) sum += v;
    for (double& v : components) v /= sum;
    return Direction{std::move(components), true};
}

// --- Region: construction ----------------------------------------------------

Region::Region(int dim, Kind kind, Flags flags) : dim_(dim), kind_(std::move(kind)), flags_(flags) {
    if (dim_ < 1) throw InputError("region: dim must be >= 1");
    if (const auto* b = std::get_if<LpBall>(&kind_)) {
        if (!(b->p >= 1.0)) throw InputError("lp_ball: p must be in [1, inf]");
        if (!(b->radius > 0.0) || !std::isfinite(b->radius))
            throw InputError("lp_ball: radius must be positive and finite");
    } else if (const auto* b = std::get_if<Box>(&kind_)) {
        if (static_cast<int>(b->half_widths.size()) != dim_)
            throw InputError("box: half_widths length must equal dim");
        for (double a : b->half_widths)
            if (!(a > 0.0) || !std::isfinite(a))
                throw InputError("box: half-widths must be positive and finite");
    } else if (const auto* m = std::get_if<MonotoneBoundary2D>(&kind_)) {
        if (dim_ != 2) throw InputError("monotone_boundary_2d: dim must be 2");
        if (!(m->scale > 0.0) || !std::isfinite(m->scale))
            throw InputError("monotone_boundary_2d: scale must be positive and finite");
    } else if (const auto* g = std::get_if<GaugeTable>(&kind_)) {
        if (dim_ != 2) throw InputError("gauge_table: dim must be 2");
        const auto& fr = g->fractions;
        if (fr.size() < 2 || fr.size() != g->values.size())
            throw InputError("gauge_table: fractions/values must have equal length >= 2");
        if (fr.front() != 0.0 || fr.back() != 1.0)
            throw InputError("gauge_table: fractions must start at 0 and end at 1");
        for (size_t i = 1; i < fr.size(); ++i)
            if (!(fr[i] > fr[i - 1])) throw InputError("gauge_table: fractions must increase");
        for (double v : g->values)
            if (!(v > 0.0) || !std::isfinite(v))
                throw InputError("gauge_table: values must be positive and finite");
    }
}

// --- Region: membership -------------------------------------------------------

namespace {

/// Signed margin to the outer boundary in coordinate units (> 0 inside).
struct MarginVisitor {
    std::span<const double> x;

    double operator()(const LpBall& b) const { return b.radius - norm_p(x, b.p); }

    double operator()(const Box& b) const {
        double m = kInf;
        for (size_t i = 0; i < b.half_widths.size(); ++i) m = std::min(m, b.half_widths[i] - x[i]);
        return m;
    }

    double operator()(const MonotoneBoundary2D& m) const {
        const double a = x[0] / m.scale, b = x[1] / m.scale;
        if (a > curve_x_end()) return m.scale * (curve_x_end() - a);
        return m.scale * (curve_y(curve_alpha_at_x(a)) - b);
    }

    double operator()(const GaugeTable& g) const {
        const double t = x[0] + x[1];
        if (t == 0.0) return *std::min_element(g.values.begin(), g.values.end());
        return gauge_table_interp(g, x[1] / t) - t;
    }
};

}  // namespace

bool Region::contains(std::span<const double> point) const {
    check_point(point, dim_, "contains");
    for (double v : point)
        if (v < 0.0) return false;
    return std::visit(MarginVisitor{point}, kind_) > 0.0;
}

Side Region::classify(std::span<const double> point, double tol) const {
    check_point(point, dim_, "classify");
    for (double v : point)
        if (v < 0.0) return Side::outside;
    const double m = std::visit(MarginVisitor{point}, kind_);
    if (m > tol) return Side::inside;
    if (m < -tol) return Side::outside;
    return Side::boundary;
}

// --- Region: gauge -------------------------------------------------------------

std::vector<double> Region::axis_extents() const {
    std::vector<double> ext(dim_);
    if (const auto* b = std::get_if<LpBall>(&kind_)) {
        std::fill(ext.begin(), ext.end(), b->radius);
    } else if (const auto* b = std::get_if<Box>(&kind_)) {
        ext = b->half_widths;
    } else if (const auto* m = std::get_if<MonotoneBoundary2D>(&kind_)) {
        ext[0] = ext[1] = m->scale * curve_x_end();
    } else if (const auto* g = std::get_if<GaugeTable>(&kind_)) {
        ext[0] = g->values.front();
        ext[1] = g->values.back();
    }
    return ext;
}

double Region::gauge(std::span<const double> u) const {
    check_direction(u, dim_);
    if (const auto* b = std::get_if<LpBall>(&kind_)) {
        return b->radius / norm_p(u, b->p);
    }
    if (const auto* b = std::get_if<Box>(&kind_)) {
        double g = kInf;
        for (size_t i = 0; i < b->half_widths.size(); ++i)
            if (u[i] > 0.0) g = std::min(g, b->half_widths[i] / u[i]);
        return g;
    }
    if (const auto* g = std::get_if<GaugeTable>(&kind_)) {
        // interpolation in the simplex coordinate is exact for this kind,
        // but gauge is homogeneous of degree -1 in the raw direction
        const double sum = u[0] + u[1];
        return gauge_table_interp(*g, u[1] / sum) / sum;
    }
    // generic path: bisection on the membership predicate, bracketed by the
    // axis-extent box which the region is contained in
    double hi = kInf;
    const auto ext = axis_extents();
    for (int i = 0; i < dim_; ++i)
        if (u[i] > 0.0) hi = std::min(hi, ext[i] / u[i]);
    std::vector<double> pt(dim_);
    auto member = [&](double t) {
        for (int i = 0; i < dim_; ++i) pt[i] = t * u[i];
        return contains(pt);
    };
    if (member(hi)) return hi;  // defensive; extents make this unreachable
    return bisect_last_true(member, 0.0, hi, kGaugeBisect);
}

double Region::gauge(const Direction& d) const { return gauge(std::span<const double>(d.components)); }

double Region::gauge_error_bound() const {
    if (std::holds_alternative<MonotoneBoundary2D>(kind_)) {
        const double s = std::get<MonotoneBoundary2D>(kind_).scale;
        return 1e-11 * std::max(1.0, s);
    }
    return 0.0;
}

Region Region::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw InputError("scaled: factor must be positive and finite");
    Kind k = kind_;
    if (auto* b = std::get_if<LpBall>(&k)) {
        b->radius *= factor;
    } else if (auto* b = std::get_if<Box>(&k)) {
        for (double& a : b->half_widths) a *= factor;
    } else if (auto* m = std::get_if<MonotoneBoundary2D>(&k)) {
        m->scale *= factor;
    } else if (auto* g = std::get_if<GaugeTable>(&k)) {
        for (double& v : g->values) v *= factor;
    }
    return Region(dim_, std::move(k), flags_);
}

// --- JSON ----------------------------------------------------------------------

namespace {

double parse_extended_real(const nlohmann::json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "Infinity" || s == "+inf") return kInf;
    }
    throw InputError(std::string(what) + ": expected a number or \"inf\"");
}

Flags parse_flags(const nlohmann::json& j) {
    Flags f;
    if (!j.is_array()) throw InputError("region: flags must be an array of strings");
    for (const auto& e : j) {
        if (!e.is_string()) throw InputError("region: flags must be strings");
        const auto s = e.get<std::string>();
        if (s == "balanced")
            f.balanced = true;
        else if (s == "symmetric")
            f.symmetric = true;
        else if (s == "convex")
            f.convex = true;
        else if (s == "concave")
            f.concave = true;
        else
            throw InputError("region: unknown flag '" + s + "'");
    }
    return f;
}

}  // namespace

Region Region::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("region: expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError("region: missing integer field 'dim'");
    const int dim = j["dim"].get<int>();
    if (!j.contains("kind") || !j["kind"].is_object())
        throw InputError("region: missing object field 'kind'");
    const auto& k = j["kind"];
    if (!k.contains("type") || !k["type"].is_string())
        throw InputError("region: kind needs a string field 'type'");
    const auto type = k["type"].get<std::string>();
    Flags flags = j.contains("flags") ? parse_flags(j["flags"]) : Flags{};

    if (type == "lp_ball") {
        LpBall b;
        if (!k.contains("p") || !k.contains("radius"))
            throw InputError("lp_ball: needs fields 'p' and 'radius'");
        b.p = parse_extended_real(k["p"], "lp_ball.p");
        b.radius = parse_extended_real(k["radius"], "lp_ball.radius");
        return Region(dim, b, flags);
    }
    if (type == "box") {
        Box b;
        if (!k.contains("half_widths") || !k["half_widths"].is_array())
            throw InputError("box: needs array field 'half_widths'");
        for (const auto& e : k["half_widths"])
            b.half_widths.push_back(parse_extended_real(e, "box.half_widths"));
        return Region(dim, std::move(b), flags);
    }
    if (type == "monotone_boundary_2d") {
        MonotoneBoundary2D m;
        if (!k.contains("curve") || !k["curve"].is_string() ||
            k["curve"].get<std::string>() != "bidisk")
            throw InputError("monotone_boundary_2d: 'curve' must be \"bidisk\"");
        if (k.contains("scale")) m.scale = parse_extended_real(k["scale"], "scale");
        return Region(dim, m, flags);
    }
    if (type == "gauge_table") {
        GaugeTable g;
        if (!k.contains("fractions") || !k["fractions"].is_array() || !k.contains("values") ||
            !k["values"].is_array())
            throw InputError("gauge_table: needs array fields 'fractions' and 'values'");
        for (const auto& e : k["fractions"]) g.fractions.push_back(e.get<double>());
        for (const auto& e : k["values"]) g.values.push_back(e.get<double>());
        return Region(dim, std::move(g), flags);
    }
    throw InputError("region: unknown kind type '" + type + "'");
}

Region Region::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("region: malformed JSON");
    return from_json(j);
}

nlohmann::json Region::to_json() const {
    nlohmann::json k;
    auto ext = [](double v) -> nlohmann::json {
        if (std::isinf(v)) return "inf";
        return v;
    };
    if (const auto* b = std::get_if<LpBall>(&kind_)) {
        k = {{"type", "lp_ball"}, {"p", ext(b->p)}, {"radius", b->radius}};
    } else if (const auto* b = std::get_if<Box>(&kind_)) {
        k = {{"type", "box"}, {"half_widths", b->half_widths}};
    } else if (const auto* m = std::get_if<MonotoneBoundary2D>(&kind_)) {
        k = {{"type", "monotone_boundary_2d"}, {"curve", "bidisk"}, {"scale", m->scale}};
    } else if (const auto* g = std::get_if<GaugeTable>(&kind_)) {
        k = {{"type", "gauge_table"}, {"fractions", g->fractions}, {"values", g->values}};
    }
    nlohmann::json flags = nlohmann::json::array();
    if (flags_.balanced) flags.push_back("balanced");
    if (flags_.symmetric) flags.push_back("symmetric");
    if (flags_.convex) flags.push_back("convex");
    if (flags_.concave) flags.push_back("concave");
    return {{"dim", dim_}, {"kind", k}, {"flags", flags}};
}

// --- simplex grids ---------------------------------------------------------------

namespace {

/// Generalized golden ratio: the positive root of x^(d+1) = x + 1.
double phi_d(int d) {
    double x = 1.5;
    for (int i = 0; i < 64; ++i) x = std::pow(1.0 + x, 1.0 / (d + 1));
    return x;
}

}  // namespace

std::vector<std::vector<double>> simplex_grid(int dim, int size) {
    if (dim < 1) throw InputError("simplex_grid: dim must be >= 1");
    if (size <= 0) size = 512 * dim;
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(size));
    if (dim == 1) {
        out.push_back({1.0});
        return out;
    }
    // fixed anchors: vertices, edge midpoints, centroid
    for (int i = 0; i < dim; ++i) {
        std::vector<double> v(dim, 0.0);
        v[i] = 1.0;
        out.push_back(std::move(v));
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            std::vector<double> v(dim, 0.0);
            v[i] = v[j] = 0.5;
            out.push_back(std::move(v));
        }
    out.push_back(std::vector<double>(dim, 1.0 / dim));

    // Kronecker sequence in the cube, mapped to the simplex by sorted gaps
    const int d = dim - 1;
    const double phi = phi_d(d);
    std::vector<double> alpha(d);
    for (int j = 0; j < d; ++j) alpha[j] = std::pow(1.0 / phi, j + 1);
    std::vector<double> w(d + 2);
    for (int k = 1; static_cast<int>(out.size()) < size; ++k) {
        for (int j = 0; j < d; ++j) {
            double v = 0.5 + k * alpha[j];
            w[j + 1] = v - std::floor(v);
        }
        w[0] = 0.0;
        w[d + 1] = 1.0;
        std::sort(w.begin() + 1, w.begin() + 1 + d);
        std::vector<double> u(dim);
        for (int j = 0; j < dim; ++j) u[j] = w[j + 1] - w[j];
        out.push_back(std::move(u));
    }
    return out;
}

SimplexMin minimize_on_simplex(int dim, const std::function<double(std::span<const double>)>& f,
                               int grid_size) {
    const auto grid = simplex_grid(dim, grid_size);
    size_t best = 0;
    double best_val = kInf;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double v = f(grid[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    if (dim == 1) return {grid[best], best_val};

    if (dim == 2) {
        // refine in the scalar simplex coordinate s, u = (1-s, s)
        std::vector<double> ss;
        ss.reserve(grid.size());
        for (const auto& u : grid) ss.push_back(u[1]);
        std::sort(ss.begin(), ss.end());
        ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
        const double s_best = grid[best][1];
        auto it = std::lower_bound(ss.begin(), ss.end(), s_best);
        const double lo = (it == ss.begin()) ? 0.0 : *(it - 1);
        const double hi = (it + 1 >= ss.end()) ? 1.0 : *(it + 1);
        auto fs = [&](double s) {
            std::array<double, 2> u{1.0 - s, s};
            return f(u);
        };
        const double s_ref = golden_min(fs, lo, hi, 1e-11);
        const double v_ref = fs(s_ref);
        if (v_ref < best_val) return {{1.0 - s_ref, s_ref}, v_ref};
        return {grid[best], best_val};
    }

    // compass search on the simplex: shift mass between coordinate pairs
    std::vector<double> cur = grid[best];
    double cur_val = best_val;
    double h = 0.25;
    std::vector<double> probe(dim);
    for (int sweep = 0; sweep < 300 && h > 1e-11; ++sweep) {
        bool improved = false;
        for (int i = 0; i < dim; ++i) {
            if (cur[i] <= 0.0) continue;
            for (int j = 0; j < dim; ++j) {
                if (j == i) continue;
                probe = cur;
                const double move = std::min(h, probe[i]);
                probe[i] -= move;
                probe[j] += move;
                const double v = f(probe);
                if (v < cur_val) {
                    cur = probe;
                    cur_val = v;
                    improved = true;
                }
            }
        }
        if (!improved) h *= 0.5;
    }
    return {cur, cur_val};
}

// --- inclusion -------------------------------------------------------------------

InclusionResult includes(const Region& inner, const Region& outer, InclusionOptions opt) {
    if (inner.dim() != outer.dim()) throw InputError("includes: dimension mismatch");
    const int dim = inner.dim();
    const int grid = opt.grid_size > 0 ? opt.grid_size : 512 * dim;

    auto margin = [&](std::span<const double> u) { return outer.gauge(u) - inner.gauge(u); };
    const SimplexMin m = minimize_on_simplex(dim, margin, grid);

    InclusionResult res;
    res.grid_size = grid;
    res.min_margin = m.value;
    res.worst_direction = m.direction;

    const double g_in = inner.gauge(m.direction);
    const double g_out = outer.gauge(m.direction);
    const double err = inner.gauge_error_bound() + outer.gauge_error_bound() +
                       64.0 * std::numeric_limits<double>::epsilon() * (std::abs(g_in) + std::abs(g_out));
    res.error_bound = err;

    const double reject = std::max(opt.tol, err);
    if (m.value < -reject) {
        std::vector<double> w(dim);
        const double t = 0.5 * (g_in + g_out);
        for (int i = 0; i < dim; ++i) w[i] = t * m.direction[i];
        if (inner.contains(w) && !outer.contains(w)) {
            res.status = InclusionStatus::not_included;
            res.witness = std::move(w);
        } else {
            res.status = InclusionStatus::inconclusive;  // gauges and membership disagree
        }
        return res;
    }
    if (m.value >= -err) {
        res.status = InclusionStatus::included;
        return res;
    }
    res.status = InclusionStatus::inconclusive;
    return res;
}

// --- flag validation ----------------------------------------------------------

bool ValidationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

struct Sampler {
    const Region& region;
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> unit{0.0, 1.0};
    std::vector<double> extents;

    Sampler(const Region& r, std::uint64_t seed) : region(r), rng(seed), extents(r.axis_extents()) {}

    std::vector<double> direction() {
        std::vector<double> u(region.dim());
        double sum = 0.0;
        for (double& v : u) {
            v = -std::log(std::max(unit(rng), 1e-300));
            sum += v;
        }
        for (double& v : u) v /= sum;
        return u;
    }

    /// Point strictly inside, clear of the tol band; empty on failure.
    std::vector<double> member(double tol) {
        for (int tries = 0; tries < 16; ++tries) {
            auto u = direction();
            const double g = region.gauge(u);
            if (!(g > 8.0 * tol)) continue;
            const double t = unit(rng) * (g - 8.0 * tol);
            std::vector<double> x(u.size());
            for (size_t i = 0; i < u.size(); ++i) x[i] = t * u[i];
            if (region.classify(x, tol) == Side::inside) return x;
        }
        return {};
    }

    /// Point strictly outside (within 1.25x the bounding box); empty on failure.
    std::vector<double> non_member(double tol) {
        for (int tries = 0; tries < 64; ++tries) {
            std::vector<double> x(region.dim());
            for (int i = 0; i < region.dim(); ++i) x[i] = unit(rng) * extents[i] * 1.25;
            if (region.classify(x, tol) == Side::outside) return x;
        }
        return {};
    }
};

}  // namespace

ValidationReport validate_flags(const Region& region, ValidationOptions opt) {
    ValidationReport report;
    const Flags& f = region.flags();
    Sampler s(region, opt.seed);

    auto skipped = [](const char* name) {
        FlagCheck c;
        c.flag = name;
        c.claimed = false;
        c.note = "not claimed; skipped";
        return c;
    };

    // balanced: box-closedness (shrinking any coordinate keeps membership)
    // plus boundedness, which holds by construction for every kind here.
    if (f.balanced) {
        FlagCheck c;
        c.flag = "balanced";
        c.claimed = true;
        for (int i = 0; i < opt.samples; ++i) {
            auto x = s.member(opt.tol);
            if (x.empty()) continue;
            auto y = x;
            for (double& v : y) v *= s.unit(s.rng);
            ++c.samples;
            if (region.classify(y, opt.tol) == Side::outside) {
                c.passed = false;
                c.counterexample = {x, y};
                c.note = "coordinate shrink left the region";
                break;
            }
        }
        report.checks.push_back(std::move(c));
    } else {
        report.checks.push_back(skipped("balanced"));
    }

    if (f.symmetric) {
        FlagCheck c;
        c.flag = "symmetric";
        c.claimed = true;
        std::vector<size_t> perm(region.dim());
        for (int i = 0; i < opt.samples; ++i) {
            auto x = s.member(opt.tol);
            if (x.empty()) continue;
            for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
            std::shuffle(perm.begin(), perm.end(), s.rng);
            std::vector<double> y(x.size());
            for (size_t k = 0; k < perm.size(); ++k) y[k] = x[perm[k]];
            ++c.samples;
            if (region.classify(y, opt.tol) == Side::outside) {
                c.passed = false;
                c.counterexample = {x, y};
                c.note = "coordinate permutation left the region";
                break;
            }
        }
        report.checks.push_back(std::move(c));
    } else {
        report.checks.push_back(skipped("symmetric"));
    }

    if (f.convex) {
        FlagCheck c;
        c.flag = "convex";
        c.claimed = true;
        for (int i = 0; i < opt.samples; ++i) {
            auto x = s.member(opt.tol);
            auto y = s.member(opt.tol);
            if (x.empty() || y.empty()) continue;
            std::vector<double> mid(x.size());
            for (size_t k = 0; k < x.size(); ++k) mid[k] = 0.5 * (x[k] + y[k]);
            ++c.samples;
            if (region.classify(mid, opt.tol) == Side::outside) {
                c.passed = false;
                c.counterexample = {x, y, mid};
                c.note = "midpoint of members left the region";
                break;
            }
        }
        report.checks.push_back(std::move(c));
    } else {
        report.checks.push_back(skipped("convex"));
    }

    if (f.concave) {
        FlagCheck c;
        c.flag = "concave";
        c.claimed = true;
        for (int i = 0; i < opt.samples; ++i) {
            auto x = s.non_member(opt.tol);
            auto y = s.non_member(opt.tol);
            if (x.empty() || y.empty()) continue;
            std::vector<double> mid(x.size());
            for (size_t k = 0; k < x.size(); ++k) mid[k] = 0.5 * (x[k] + y[k]);
            ++c.samples;
            if (region.classify(mid, opt.tol) == Side::inside) {
                c.passed = false;
                c.counterexample = {x, y, mid};
                c.note = "midpoint of outside points entered the region";
                break;
            }
        }
        report.checks.push_back(std::move(c));
    } else {
        report.checks.push_back(skipped("concave"));
    }

    return report;
}

}  // namespace symcap
