#include "symcap/io.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace symcap {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double extended_real_from_json(const json& j, const char* what) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
        throw InputError(std::string(what) + ": expected a number or \"inf\", got \"" + s + "\"");
    }
    if (j.is_number()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) throw InputError(std::string(what) + ": number must be finite");
        return v;
    }
    throw InputError(std::string(what) + ": expected a number or \"inf\"");
}

json extended_real_to_json(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

const char* to_string(CapacityMethod m) {
    switch (m) {
        case CapacityMethod::closed_form: return "closed_form";
        case CapacityMethod::diagonal_gauge: return "diagonal_gauge";
        case CapacityMethod::simplex_min_gauge: return "simplex_min_gauge";
    }
    return "?";
}

const char* to_string(InclusionStatus s) {
    switch (s) {
        case InclusionStatus::included: return "Included";
        case InclusionStatus::not_included: return "NotIncluded";
        case InclusionStatus::inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::i: return "i";
        case TheoremCase::ii: return "ii";
        case TheoremCase::iii: return "iii";
        case TheoremCase::iv: return "iv";
        case TheoremCase::none: return "none";
    }
    return "?";
}

const char* to_string(EmbedAnswer a) {
    switch (a) {
        case EmbedAnswer::embeds: return "Embeds";
        case EmbedAnswer::not_embeds: return "NotEmbeds";
        case EmbedAnswer::out_of_scope: return "OutOfScope";
    }
    return "?";
}

const char* to_string(Rigidity r) {
    return r == Rigidity::rigid ? "Rigid" : "NotRigid";
}

const char* to_string(Side s) {
    switch (s) {
        case Side::inside: return "inside";
        case Side::boundary: return "boundary";
        case Side::outside: return "outside";
    }
    return "?";
}

json to_json(const CapacityValue& v) {
    return json{{"value", v.value}, {"method", to_string(v.method)}, {"error_bound", v.error_bound}};
}

json to_json(const CapacityReport& r) {
    return json{{"c1", r.c1},
                {"c_infinity", r.c_infinity},
                {"method", to_string(r.method)},
                {"error_bound", r.error_bound}};
}

json to_json(const CapacityObstruction& o) {
    return json{{"capacity", o.capacity},
                {"inner_value", o.inner_value},
                {"outer_value", o.outer_value},
                {"slack", o.slack}};
}

json to_json(const InclusionResult& r) {
    return json{{"status", to_string(r.status)},       {"min_margin", r.min_margin},
                {"worst_direction", r.worst_direction}, {"witness", r.witness},
                {"error_bound", r.error_bound},        {"grid_size", r.grid_size}};
}

json to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(json{{"flag", c.flag},
                              {"claimed", c.claimed},
                              {"passed", c.passed},
                              {"samples", c.samples},
                              {"counterexample", c.counterexample},
                              {"note", c.note}});
    }
    return json{{"all_passed", r.all_passed()}, {"checks", std::move(checks)}};
}

json to_json(const EmbedVerdict& v) {
    json cert;
    if (const auto* inc = std::get_if<InclusionCertificate>(&v.certificate)) {
        cert = json{{"type", "inclusion"},
                    {"normalization", inc->normalization},
                    {"inclusion", to_json(inc->inclusion)}};
    } else if (const auto* obs = std::get_if<CapacityObstruction>(&v.certificate)) {
        cert = to_json(*obs);
        cert["type"] = "capacity_obstruction";
    } else {
        const auto& scope = std::get<ScopeExplanation>(v.certificate);
        cert = json{{"type", "scope"}, {"message", scope.message}};
        if (scope.obstruction) cert["obstruction"] = to_json(*scope.obstruction);
    }
    return json{{"verdict", to_string(v.verdict)},
                {"case", to_string(v.case_used)},
                {"certificate", std::move(cert)}};
}

json to_json(const NonrigidityWitnesses& w) {
    return json{{"quad_simplex_in_bidisk", to_json(w.quad_simplex_in_bidisk)},
                {"diamond_in_round", w.diamond_in_round},
                {"square_in_round", w.square_in_round},
                {"round_cover_product", w.round_cover_product},
                {"round_in_diamond", w.round_in_diamond},
                {"round_in_square", w.round_in_square},
                {"inclusion_cost", w.inclusion_cost},
                {"flexible_embedding_factor", w.flexible_embedding_factor},
                {"strict_gap", w.strict_gap}};
}

json to_json(const ActionProfile& p) {
    json samples = json::array();
    for (const auto& s : p.samples)
        samples.push_back(json{{"c", s.c}, {"value", s.value}, {"error", s.error}});
    return json{{"epsilon", p.epsilon}, {"samples", std::move(samples)}};
}

json rigidity_table_json() {
    json rows = json::array();
    for (const auto& row : rigidity_table()) {
        rows.push_back(json{{"p", extended_real_to_json(row.p)},
                            {"q", extended_real_to_json(row.q)},
                            {"r", extended_real_to_json(row.r)},
                            {"s", extended_real_to_json(row.s)},
                            {"verdict", to_string(row.verdict)}});
    }
    return json{{"rows", std::move(rows)}};
}

std::string rigidity_table_csv() {
    std::string out = "p,q,r,s,verdict\n";
    for (const auto& row : rigidity_table()) {
        out += fmt17(row.p);
        out += ',';
        out += fmt17(row.q);
        out += ',';
        out += fmt17(row.r);
        out += ',';
        out += fmt17(row.s);
        out += ',';
        out += to_string(row.verdict);
        out += '\n';
    }
    return out;
}

std::string action_profiles_csv(const std::vector<ActionProfile>& profiles) {
    std::string out = "epsilon,c,I,err\n";
    for (const auto& p : profiles) {
        for (const auto& s : p.samples) {
            out += fmt17(p.epsilon);
            out += ',';
            out += fmt17(s.c);
            out += ',';
            out += fmt17(s.value);
            out += ',';
            out += fmt17(s.error);
            out += '\n';
        }
    }
    return out;
}

std::string bidisk_curve_csv(int samples) {
    std::string out = "alpha,x,y\n";
    for (const auto& s : bidisk_curve_samples(samples)) {
        out += fmt17(s.alpha);
        out += ',';
        out += fmt17(s.x);
        out += ',';
        out += fmt17(s.y);
        out += '\n';
    }
    return out;
}

}  // namespace symcap
