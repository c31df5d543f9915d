// Command-line front end: computes capacities, embedding verdicts, the
// rigidity table, action profiles, the bidisk curve, and flag validation
// reports, as JSON/CSV/pretty text.  Output is buffered and written whole, so
// failures produce no partial output.  Exit codes: 0 success (and Embeds),
// 2 bad input, 3 NotEmbeds, 4 OutOfScope or a domain/accuracy failure.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symcap/billiard.hpp"
#include "symcap/capacity.hpp"
#include "symcap/embed.hpp"
#include "symcap/io.hpp"
#include "symcap/products.hpp"
#include "symcap/region.hpp"

namespace {

using nlohmann::json;
using namespace symcap;

Region read_region(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open region file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Region::from_json_text(buf.str());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + out_path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Options {
    std::string format = "pretty";
    std::string out;
    double tol = 1e-9;
    bool tol_set = false;
    int grid = 0;
    std::uint64_t seed = 0x5eedULL;
};

std::string render_capacity(const CapacityReport& r, const std::string& format) {
    if (format == "json") return dump(to_json(r));
    if (format == "csv") {
        return "c1,c_infinity,method,error_bound\n" + fmt17(r.c1) + "," + fmt17(r.c_infinity) +
               "," + to_string(r.method) + "," + fmt17(r.error_bound) + "\n";
    }
    return "c1          = " + fmt17(r.c1) + "\nc_infinity  = " + fmt17(r.c_infinity) +
           "\nmethod      = " + to_string(r.method) + "\nerror_bound = " + fmt17(r.error_bound) +
           "\n";
}

std::string render_embed(const EmbedVerdict& v, const std::string& format) {
    if (format == "json" || format == "csv") return dump(to_json(v));
    std::string text = "verdict = ";
    text += to_string(v.verdict);
    text += "\ncase    = ";
    text += to_string(v.case_used);
    text += '\n';
    if (const auto* inc = std::get_if<InclusionCertificate>(&v.certificate)) {
        text += "evidence: inclusion " + std::string(to_string(inc->inclusion.status)) +
                ", min margin " + fmt17(inc->inclusion.min_margin) + ", normalization " +
                fmt17(inc->normalization) + "\n";
    } else if (const auto* obs = std::get_if<CapacityObstruction>(&v.certificate)) {
        text += "evidence: capacity obstruction on " + obs->capacity + " (" +
                fmt17(obs->inner_value) + " > " + fmt17(obs->outer_value) + ", slack " +
                fmt17(obs->slack) + ")\n";
    } else {
        const auto& scope = std::get<ScopeExplanation>(v.certificate);
        text += "note: " + scope.message + "\n";
        if (scope.obstruction) {
            text += "obstruction: " + scope.obstruction->capacity + " decreases (" +
                    fmt17(scope.obstruction->inner_value) + " > " +
                    fmt17(scope.obstruction->outer_value) + ")\n";
        }
    }
    return text;
}

std::string render_rigidity(const std::string& format) {
    if (format == "json") return dump(rigidity_table_json());
    if (format == "csv") return rigidity_table_csv();
    std::string text = "p     q     r     s     verdict\n";
    for (const auto& row : rigidity_table()) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-5s %-5s %-5s %-5s %s\n", fmt17(row.p).c_str(),
                      fmt17(row.q).c_str(), fmt17(row.r).c_str(), fmt17(row.s).c_str(),
                      to_string(row.verdict));
        text += buf;
    }
    return text;
}

std::vector<ActionProfile> build_profiles(const std::vector<double>& epsilons,
                                          const std::vector<double>& cs, double quad_tol) {
    std::vector<ActionProfile> profiles;
    for (double eps : epsilons) {
        if (eps < 0.0) throw InputError("action: epsilon must be >= 0");
        ActionProfile p;
        p.epsilon = eps;
        BilliardParams params;
        params.epsilon = eps;
        params.quadrature.abs_tol = quad_tol;
        for (double c : cs) {
            ActionProfile::Sample s;
            s.c = c;
            try {
                if (eps == 0.0) {
                    s.value = action_limit(c);
                    s.error = 0.0;
                } else {
                    const ActionValue a = action(params, c);
                    s.value = a.value;
                    s.error = a.error_estimate;
                }
            } catch (const Error& e) {
                s.value = std::numeric_limits<double>::quiet_NaN();
                s.error = std::numeric_limits<double>::quiet_NaN();
                std::cerr << "action: row (epsilon=" << fmt17(eps) << ", c=" << fmt17(c)
                          << ") skipped: " << e.what() << "\n";
            }
            p.samples.push_back(s);
        }
        profiles.push_back(std::move(p));
    }
    return profiles;
}

std::string render_action(const std::vector<ActionProfile>& profiles, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& p : profiles) arr.push_back(to_json(p));
        return dump(json{{"profiles", std::move(arr)}});
    }
    return action_profiles_csv(profiles);  // csv and pretty share the table
}

std::string render_bidisk(int samples, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& s : bidisk_curve_samples(samples))
            arr.push_back(json{{"alpha", s.alpha}, {"x", s.x}, {"y", s.y}});
        return dump(json{{"samples", std::move(arr)}});
    }
    return bidisk_curve_csv(samples);
}

std::string render_validation(const ValidationReport& r, const std::string& format) {
    if (format == "json") return dump(to_json(r));
    if (format == "csv") {
        std::string text = "flag,claimed,passed,samples,note\n";
        for (const auto& c : r.checks) {
            text += c.flag + "," + (c.claimed ? "true" : "false") + "," +
                    (c.passed ? "true" : "false") + "," + std::to_string(c.samples) + ",\"" +
                    c.note + "\"\n";
        }
        return text;
    }
    std::string text;
    for (const auto& c : r.checks) {
        text += c.flag + ": " + (!c.claimed ? "not claimed" : c.passed ? "pass" : "FAIL") + " (" +
                std::to_string(c.samples) + " samples)";
        if (!c.note.empty()) text += " -- " + c.note;
        text += '\n';
        for (const auto& pt : c.counterexample) {
            text += "  counterexample:";
            for (double x : pt) text += " " + fmt17(x);
            text += '\n';
        }
    }
    text += std::string("all passed: ") + (r.all_passed() ? "yes" : "no") + "\n";
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric-domain capacities, embedding verdicts and billiard actions"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "write output to this file instead of stdout");
    auto* tol_opt = app.add_option("--tol", opt.tol, "tolerance override");
    app.add_option("--grid", opt.grid, "direction-grid size override (0 = default)");
    app.add_option("--seed", opt.seed, "seed for sampling validators");

    std::string region_path, source_path, target_path;
    bool generic = false;
    std::vector<double> epsilons, cs;
    int curve_samples = 256;
    int validate_samples = 2048;

    auto* cmd_capacity = app.add_subcommand("capacity", "capacities of a region");
    cmd_capacity->add_option("region", region_path, "region JSON file")->required();
    cmd_capacity->add_flag("--generic", generic, "force the generic gauge path");

    auto* cmd_embed = app.add_subcommand("embed", "embedding verdict for a pair of regions");
    cmd_embed->add_option("source", source_path, "source region JSON file")->required();
    cmd_embed->add_option("target", target_path, "target region JSON file")->required();

    auto* cmd_rigidity = app.add_subcommand("rigidity", "the 81-row exponent-pair table");

    auto* cmd_action = app.add_subcommand("action", "action profiles I(c) per epsilon");
    cmd_action->add_option("--epsilon", epsilons, "epsilon values (0 = the limit profile)")
        ->required()
        ->delimiter(',');
    cmd_action->add_option("--c", cs, "energy values")->required()->delimiter(',');

    auto* cmd_bidisk = app.add_subcommand("bidisk", "bidisk boundary curve samples");
    cmd_bidisk->add_option("--samples", curve_samples, "number of curve segments")
        ->capture_default_str();

    auto* cmd_validate = app.add_subcommand("validate", "sampled validation of claimed flags");
    cmd_validate->add_option("region", region_path, "region JSON file")->required();
    cmd_validate->add_option("--samples", validate_samples, "sample budget per flag")
        ->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.tol_set = tol_opt->count() > 0;

    try {
        if (app.got_subcommand(cmd_capacity)) {
            CapacityOptions copt;
            copt.prefer_closed_form = !generic;
            copt.grid_size = opt.grid;
            copt.seed = opt.seed;
            emit(render_capacity(capacity_report(read_region(region_path), copt), opt.format),
                 opt.out);
            return 0;
        }
        if (app.got_subcommand(cmd_embed)) {
            EmbedOptions eopt;
            eopt.tol = opt.tol;
            eopt.grid_size = opt.grid;
            eopt.seed = opt.seed;
            const EmbedVerdict v =
                decide_embedding(read_region(source_path), read_region(target_path), eopt);
            emit(render_embed(v, opt.format), opt.out);
            switch (v.verdict) {
                case EmbedAnswer::embeds: return 0;
                case EmbedAnswer::not_embeds: return 3;
                case EmbedAnswer::out_of_scope: return 4;
            }
            return 0;
        }
        if (app.got_subcommand(cmd_rigidity)) {
            emit(render_rigidity(opt.format), opt.out);
            return 0;
        }
        if (app.got_subcommand(cmd_action)) {
            const double quad_tol = opt.tol_set ? opt.tol : QuadratureConfig{}.abs_tol;
            emit(render_action(build_profiles(epsilons, cs, quad_tol), opt.format), opt.out);
            return 0;
        }
        if (app.got_subcommand(cmd_bidisk)) {
            emit(render_bidisk(curve_samples, opt.format), opt.out);
            return 0;
        }
        if (app.got_subcommand(cmd_validate)) {
            ValidationOptions vopt;
            vopt.samples = validate_samples;
            vopt.seed = opt.seed;
            if (opt.tol_set) vopt.tol = opt.tol;
            const ValidationReport report = validate_flags(read_region(region_path), vopt);
            emit(render_validation(report, opt.format), opt.out);
            return report.all_passed() ? 0 : 2;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
