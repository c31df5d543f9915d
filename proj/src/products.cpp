#include "symcap/products.hpp"

#include <cmath>

#include "symcap/embed.hpp"
#include "bidisk_curve.hpp"

namespace symcap {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

void check_disk(const Disk2Spec& d, const char* what) {
    if (!(d.p >= 1.0)) throw InputError(std::string(what) + ": p must be in [1, inf]");
    if (!(d.radius > 0.0) || !std::isfinite(d.radius))
        throw InputError(std::string(what) + ": radius must be positive and finite");
}

/// Rotation families that can carry one L^p disk onto a scaled other:
/// any rotation (round), quarter-turn multiples (equal exponents), or odd
/// eighth-turns (diamond <-> square, with the sqrt(2) radius conversion).
enum class UClass { any, quarter, eighth };

struct FactorMatch {
    UClass u;
    double a;  // required scale: D1 = a * U * D2
};

std::optional<FactorMatch> factor_match(const Disk2Spec& d1, const Disk2Spec& d2) {
    const bool inf1 = std::isinf(d1.p), inf2 = std::isinf(d2.p);
    if (d1.p == 2.0 && d2.p == 2.0) return FactorMatch{UClass::any, d1.radius / d2.radius};
    if (d1.p == d2.p || (inf1 && inf2)) return FactorMatch{UClass::quarter, d1.radius / d2.radius};
    if (d1.p == 1.0 && inf2) return FactorMatch{UClass::eighth, d1.radius / (d2.radius * kSqrt2)};
    if (inf1 && d2.p == 1.0) return FactorMatch{UClass::eighth, d1.radius * kSqrt2 / d2.radius};
    return std::nullopt;
}

bool compatible(UClass a, UClass b) { return a == UClass::any || b == UClass::any || a == b; }

}  // namespace

Region bidisk_region(double scale) {
    Flags f;
    f.balanced = true;
    f.symmetric = true;
    f.concave = true;
    return Region(2, MonotoneBoundary2D{CurveId::bidisk, scale}, f);
}

bool equivalent(const ProductSpec& a, const ProductSpec& b, double rel_tol) {
    check_disk(a.first, "equivalent: first product");
    check_disk(a.second, "equivalent: first product");
    check_disk(b.first, "equivalent: second product");
    check_disk(b.second, "equivalent: second product");

    // P1 ~ P2 iff some rotation U and factor t > 0 give
    //   A1 = t*U*X and B1 = (1/t)*U*Y with (X, Y) = (A2, B2) or (B2, A2).
    auto pairing = [&](const Disk2Spec& x, const Disk2Spec& y) {
        const auto m1 = factor_match(a.first, x);
        const auto m2 = factor_match(a.second, y);
        if (!m1 || !m2 || !compatible(m1->u, m2->u)) return false;
        return std::abs(m1->a * m2->a - 1.0) <= rel_tol * std::max(1.0, std::abs(m1->a * m2->a));
    };
    return pairing(b.first, b.second) || pairing(b.second, b.first);
}

namespace {

int exponent_code(double p, const char* what) {
    if (p == 1.0) return 0;
    if (p == 2.0) return 1;
    if (std::isinf(p)) return 2;
    throw InputError(std::string(what) + ": exponent must be 1, 2, or inf");
}

}  // namespace

Rigidity rigidity_classify(double p, double q, double r, double s) {
    const int a = exponent_code(p, "rigidity"), b = exponent_code(q, "rigidity");
    const int c = exponent_code(r, "rigidity"), d = exponent_code(s, "rigidity");
    // flexible tuples: (1,inf,2,2), (inf,1,2,2), (2,2,1,inf), (2,2,inf,1)
    const bool flexible = (a == 0 && b == 2 && c == 1 && d == 1) ||
                          (a == 2 && b == 0 && c == 1 && d == 1) ||
                          (a == 1 && b == 1 && c == 0 && d == 2) ||
                          (a == 1 && b == 1 && c == 2 && d == 0);
    return flexible ? Rigidity::not_rigid : Rigidity::rigid;
}

std::vector<RigidityRow> rigidity_table() {
    const double exps[3] = {1.0, 2.0, std::numeric_limits<double>::infinity()};
    std::vector<RigidityRow> rows;
    rows.reserve(81);
    for (double p : exps)
        for (double q : exps)
            for (double r : exps)
                for (double s : exps)
                    rows.push_back({p, q, r, s, rigidity_classify(p, q, r, s)});
    return rows;
}

NonrigidityWitnesses nonrigidity_witnesses(InclusionOptions opt) {
    NonrigidityWitnesses w;

    Flags simplex_flags;
    simplex_flags.balanced = simplex_flags.symmetric = simplex_flags.convex = true;
    const Region quad_simplex(2, LpBall{1.0, 4.0}, simplex_flags);
    w.quad_simplex_in_bidisk = includes(quad_simplex, bidisk_region(), opt);

    w.diamond_in_round = holder_min_scale(2, 1.0, 2.0);
    w.square_in_round = holder_min_scale(2, std::numeric_limits<double>::infinity(), 2.0);
    w.round_cover_product = w.diamond_in_round * w.square_in_round;

    w.round_in_diamond = holder_min_scale(2, 2.0, 1.0);
    w.round_in_square = holder_min_scale(2, 2.0, std::numeric_limits<double>::infinity());
    w.inclusion_cost = w.round_in_diamond * w.round_in_square;

    w.flexible_embedding_factor = 3.0 * std::sqrt(3.0) / 4.0;  // trusted external value
    w.strict_gap = w.inclusion_cost > w.flexible_embedding_factor;
    return w;
}

BidiskScales bidisk_optimal_scales(double p) {
    if (!(p >= 2.0)) throw DomainError("bidisk_optimal_scales: p must be in [2, inf]");
    BidiskScales s;
    s.into_polydisk = 1.0;
    s.from_polydisk = std::isinf(p) ? 2.0 : 2.0 / std::pow(2.0, 1.0 / p);
    return s;
}

std::vector<CurveSample> bidisk_curve_samples(int n) {
    if (n < 1) throw InputError("bidisk_curve_samples: need at least one segment");
    std::vector<CurveSample> out;
    out.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double alpha = detail::kPi * static_cast<double>(k) / n;
        out.push_back({alpha, detail::curve_x(alpha), detail::curve_y(alpha)});
    }
    return out;
}

}  // namespace symcap
