// Acceptance gate: one line per criterion, [PASS]/[FAIL] plus detail.
// Exits nonzero when any criterion fails.  All tolerances are pinned here.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "symcap/billiard.hpp"
#include "symcap/capacity.hpp"
#include "symcap/embed.hpp"
#include "symcap/products.hpp"
#include "symcap/region.hpp"

using namespace symcap;
using testutil::kInf;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id, name,
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. bidisk capacities through the generic gauge path only

void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    CapacityOptions opt;
    opt.prefer_closed_form = false;
    const CapacityReport r = capacity_report(testutil::omega0(), opt);
    const double dt = seconds_since(t0);
    const double e1 = std::abs(r.c1 - 4.0);
    const double ei = std::abs(r.c_infinity - 2.0);
    const bool pass = e1 <= 1e-6 && ei <= 1e-6 && dt < 5.0;
    report(1, "bidisk capacities c1=4, c_inf=2 (generic path, tol 1e-6, < 5 s)", pass,
           "c1 err " + fmt(e1) + ", c_inf err " + fmt(ei) + ", " + fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 2. L^p capacity table, closed forms and generic numerics

void criterion2() {
    const double roots[3][4] = {
        {0.5, 0.70710678118654752, 0.79370052598409974, 1.0},
        {0.33333333333333333, 0.57735026918962576, 0.69336127435063471, 1.0},
        {0.25, 0.5, 0.62996052494743658, 1.0},
    };
    const double ps[4] = {1.0, 2.0, 3.0, kInf};
    double worst_closed = 0.0, worst_generic = 0.0;
    for (int ni = 0; ni < 3; ++ni) {
        for (int pi = 0; pi < 4; ++pi) {
            const Region b = testutil::ball(ni + 2, ps[pi], 1.0);
            const CapacityReport closed = capacity_report(b);
            worst_closed = std::max(worst_closed, std::abs(closed.c1 - 1.0));
            worst_closed = std::max(worst_closed, std::abs(closed.c_infinity - roots[ni][pi]));
            CapacityOptions gen;
            gen.prefer_closed_form = false;
            const CapacityReport numeric = capacity_report(b, gen);
            worst_generic = std::max(worst_generic, std::abs(numeric.c1 - 1.0));
            worst_generic = std::max(worst_generic, std::abs(numeric.c_infinity - roots[ni][pi]));
        }
    }
    const bool pass = worst_closed <= 1e-15 && worst_generic <= 1e-6;
    report(2, "L^p capacity table, n in {2,3,4}, p in {1,2,3,inf}", pass,
           "closed-form err " + fmt(worst_closed) + ", generic err " + fmt(worst_generic));
}

// ---------------------------------------------------------------------------
// 3. embedding verdict flips at the sharp scaling threshold

void criterion3() {
    int checked = 0, correct = 0;
    const double ps[4] = {1.0, 2.0, 3.0, kInf};
    for (int n : {2, 3, 4}) {
        for (double p : ps) {
            for (double q : ps) {
                if (checked == 30) break;
                const bool q_le_p = std::isinf(p) ? true : (std::isinf(q) ? p == kInf : q <= p);
                if (!q_le_p) continue;
                ++checked;
                const double thr = holder_min_scale(n, p, q);
                const Region source = testutil::ball(n, p, 1.0);
                const EmbedVerdict above =
                    decide_embedding(source, testutil::ball(n, q, thr * (1.0 + 1e-3)));
                const EmbedVerdict below =
                    decide_embedding(source, testutil::ball(n, q, thr * (1.0 - 1e-3)));
                if (above.verdict == EmbedAnswer::embeds &&
                    below.verdict == EmbedAnswer::not_embeds)
                    ++correct;
            }
        }
    }
    const bool pass = checked == 30 && correct == 30;
    report(3, "verdict flips at r = n^{(p-q)/(pq)} for 30 (n,p,q) combinations", pass,
           std::to_string(correct) + "/" + std::to_string(checked) + " flips correct");
}

// ---------------------------------------------------------------------------
// 4. rigidity table: exactly the four flexible tuples

void criterion4() {
    const auto table = rigidity_table();
    auto flexible = [](const RigidityRow& r) {
        auto is = [](double v, double w) {
            return std::isinf(w) ? std::isinf(v) : v == w;
        };
        return (is(r.p, 1) && is(r.q, kInf) && is(r.r, 2) && is(r.s, 2)) ||
               (is(r.p, kInf) && is(r.q, 1) && is(r.r, 2) && is(r.s, 2)) ||
               (is(r.p, 2) && is(r.q, 2) && is(r.r, 1) && is(r.s, kInf)) ||
               (is(r.p, 2) && is(r.q, 2) && is(r.r, kInf) && is(r.s, 1));
    };
    bool exact = table.size() == 81;
    int not_rigid = 0;
    for (const auto& row : table) {
        const bool want = flexible(row);
        const bool got = row.verdict == Rigidity::not_rigid;
        exact = exact && want == got;
        if (got) ++not_rigid;
    }
    exact = exact && not_rigid == 4;
    report(4, "rigidity table has exactly the four flexible tuples among 81", exact,
           std::to_string(not_rigid) + " flexible rows");
}

// ---------------------------------------------------------------------------
// 5. non-rigidity arithmetic: inclusion oracle + 15-digit inequality chain

void criterion5() {
    const NonrigidityWitnesses w = nonrigidity_witnesses();
    const double sqrt2 = 1.4142135623730950488;
    const double factor = 1.2990381056766579701;  // 3*sqrt(3)/4
    const bool included = w.quad_simplex_in_bidisk.status == InclusionStatus::included;
    const double chain_err = std::max(std::abs(w.round_cover_product - sqrt2),
                                      std::abs(w.inclusion_cost - sqrt2));
    const double factor_err = std::abs(w.flexible_embedding_factor - factor);
    const bool digits = chain_err <= 1e-15 && factor_err <= 1e-15;
    const bool strict = w.inclusion_cost > w.flexible_embedding_factor && w.strict_gap;
    report(5, "4*simplex inside bidisk region (Included) and a*b >= sqrt(2) > 3*sqrt(3)/4",
           included && digits && strict,
           std::string("status ") +
               (included ? "Included" : "not Included") + ", chain err " + fmt(chain_err) +
               ", factor err " + fmt(factor_err));
}

// ---------------------------------------------------------------------------
// 6. action properties on random (eps, c) pairs

void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> ulog(-3.0, 1.0);
    std::uniform_real_distribution<double> umult(1.05, 20.0);

    bool zero_at_min = true, c_monotone = true, eps_monotone = true, below_limit = true;
    for (int i = 0; i < 200; ++i) {
        const double eps = std::pow(10.0, ulog(rng));
        BilliardParams p;
        p.epsilon = eps;
        const double c = umult(rng) * eps / 2.0;

        const ActionValue at_min = action(p, eps / 2.0);
        zero_at_min = zero_at_min && at_min.value == 0.0;

        const ActionValue a1 = action(p, c);
        const ActionValue a2 = action(p, c * 1.1);
        c_monotone = c_monotone && a2.value - a1.value >
                                       10.0 * (a1.error_estimate + a2.error_estimate);

        BilliardParams bigger;
        bigger.epsilon = eps * 1.5;
        if (c > bigger.epsilon / 2.0 * 1.0000001) {
            const ActionValue b = action(bigger, c);
            eps_monotone = eps_monotone &&
                           a1.value - b.value > 10.0 * (a1.error_estimate + b.error_estimate);
        }
        below_limit = below_limit && a1.value < action_limit(c);
    }

    // monotone uniform convergence of the limit on c in [0.5, 10]
    std::vector<double> cs;
    for (int i = 0; i <= 40; ++i) cs.push_back(0.5 + i * (10.0 - 0.5) / 40.0);
    bool dini = true;
    double sup_prev = std::numeric_limits<double>::infinity();
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        BilliardParams p;
        p.epsilon = eps;
        double sup = 0.0;
        for (double c : cs) sup = std::max(sup, action_limit(c) - action(p, c).value);
        dini = dini && sup > 0.0 && sup < sup_prev;
        sup_prev = sup;
    }
    const double dt = seconds_since(t0);
    const bool pass =
        zero_at_min && c_monotone && eps_monotone && below_limit && dini && dt < 30.0;
    report(6, "action: zero at eps/2, strict monotonicity, below-limit, Dini convergence", pass,
           std::string(zero_at_min ? "" : "zero-at-min failed; ") +
               (c_monotone ? "" : "c-monotonicity failed; ") +
               (eps_monotone ? "" : "eps-monotonicity failed; ") +
               (below_limit ? "" : "below-limit failed; ") + (dini ? "" : "Dini failed; ") +
               fmt(dt) + " s");
}

// ---------------------------------------------------------------------------
// 7. nested membership family: nesting and exhaustion

void criterion7() {
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> ux(-0.99, 0.99);
    std::uniform_real_distribution<double> ubox(-1.0, 1.0);
    const double schedule[] = {1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};

    bool nested = true, exhausted = true;
    int points = 0;
    const Region factors[] = {testutil::ball(2, 2.0, 1.0), testutil::ball(2, 1.0, 1.0),
                              testutil::ball(2, kInf, 1.0)};
    for (const Region& A : factors) {
        int kept = 0;
        while (kept < 500) {
            // position uniform in the open square, momentum uniform in A's
            // bounding box, kept when |y| sits in A with a small margin (the
            // open product is exhausted through such interior cores)
            const std::vector<double> x{ux(rng), ux(rng)};
            std::vector<double> y{ubox(rng), ubox(rng)};
            if (!A.contains(std::vector<double>{std::abs(y[0]) + 1e-3, std::abs(y[1]) + 1e-3}))
                continue;
            ++kept;
            ++points;
            bool member_before = false;
            for (double eps : schedule) {
                const bool member = p_epsilon_contains(A, eps, x, y);
                if (member_before && !member) nested = false;
                member_before = member;
            }
            if (!member_before) exhausted = false;
        }
    }
    report(7, "membership family: nesting across eps schedule and exhaustion by eps = 1e-8",
           nested && exhausted && points == 1500,
           std::to_string(points) + " points, " + (nested ? "nested" : "NESTING VIOLATION") +
               ", " + (exhausted ? "exhausted" : "EXHAUSTION FAILURE"));
}

// ---------------------------------------------------------------------------
// 8. brute-force raster oracle (n = 2, 400 x 400)

struct Raster {
    double cell_x = 0.0, cell_y = 0.0;
    double c1 = 0.0, ci = 0.0;
};

Raster raster_capacities(const Region& r, int cells) {
    const auto ext = r.axis_extents();
    Raster out;
    out.cell_x = 1.05 * ext[0] / cells;
    out.cell_y = 1.05 * ext[1] / cells;
    double c1 = std::numeric_limits<double>::infinity();
    double ci = std::numeric_limits<double>::infinity();
    std::vector<double> pt(2);
    for (int i = 0; i < cells; ++i) {
        pt[0] = (i + 0.5) * out.cell_x;
        for (int j = 0; j < cells; ++j) {
            pt[1] = (j + 0.5) * out.cell_y;
            if (r.contains(pt)) continue;
            c1 = std::min(c1, pt[0] + pt[1]);
            ci = std::min(ci, std::max(pt[0], pt[1]));
        }
    }
    out.c1 = c1;
    out.ci = ci;
    return out;
}

void criterion8() {
    const auto t0 = std::chrono::steady_clock::now();
    const int cells = 400;

    // capacities against the raster oracle
    double worst_cells = 0.0;
    const Region regions[] = {testutil::ball(2, 1.0, 1.0), testutil::ball(2, 2.0, 1.0),
                              testutil::ball(2, 3.0, 1.0), testutil::ball(2, kInf, 1.0),
                              testutil::box({1.5, 0.7}), testutil::omega0()};
    for (const Region& r : regions) {
        const Raster ras = raster_capacities(r, cells);
        const CapacityReport rep = capacity_report(r);
        const double cell_sum = ras.cell_x + ras.cell_y;
        const double cell_max = std::max(ras.cell_x, ras.cell_y);
        worst_cells = std::max(worst_cells, std::abs(ras.c1 - rep.c1) / cell_sum);
        worst_cells = std::max(worst_cells, std::abs(ras.ci - rep.c_infinity) / cell_max);
    }
    const bool caps_ok = worst_cells <= 2.0;

    // case-iv verdicts against rastered inclusion, outside a 2% threshold band
    int compared = 0, agreed = 0;
    const double ps[3] = {1.0, 2.0, kInf};
    for (double p : ps) {
        for (double q : ps) {
            const double thr = holder_min_scale(2, p, q);
            const Region source = testutil::ball(2, p, 1.0);
            for (double rel : {0.8, 0.9, 0.95, 1.05, 1.1, 1.25}) {
                const double radius = thr * rel;
                const Region target = testutil::ball(2, q, radius);
                const EmbedVerdict v = decide_embedding(source, target);

                // oracle: every member cell of the source is a member of the target
                bool oracle_included = true;
                const double cx = 1.05 / cells, cy = 1.05 / cells;  // unit source extents
                std::vector<double> pt(2);
                for (int i = 0; i < cells && oracle_included; ++i) {
                    pt[0] = (i + 0.5) * cx;
                    for (int j = 0; j < cells; ++j) {
                        pt[1] = (j + 0.5) * cy;
                        if (source.contains(pt) && !target.contains(pt)) {
                            oracle_included = false;
                            break;
                        }
                    }
                }
                ++compared;
                const EmbedAnswer want =
                    oracle_included ? EmbedAnswer::embeds : EmbedAnswer::not_embeds;
                if (v.verdict == want) ++agreed;
            }
        }
    }
    const bool verdicts_ok = compared == 54 && agreed == compared;
    const double dt = seconds_since(t0);
    report(8, "400x400 raster oracle: capacities within 2 cells, verdicts agree off-band",
           caps_ok && verdicts_ok,
           "worst capacity gap " + fmt(worst_cells) + " cells, verdicts " +
               std::to_string(agreed) + "/" + std::to_string(compared) + ", " + fmt(dt) + " s");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
