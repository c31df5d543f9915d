// Python bindings: Region as a class, everything else as free functions.
// Report structs cross the boundary as plain dicts (via their JSON form), so
// the Python surface stays schema-identical to the CLI output.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "symcap/billiard.hpp"
#include "symcap/capacity.hpp"
#include "symcap/embed.hpp"
#include "symcap/io.hpp"
#include "symcap/products.hpp"
#include "symcap/region.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace symcap;

namespace {

py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

CapacityOptions capacity_options(bool prefer_closed_form, int grid_size, std::uint64_t seed) {
    CapacityOptions opt;
    opt.prefer_closed_form = prefer_closed_form;
    opt.grid_size = grid_size;
    opt.seed = seed;
    return opt;
}

BilliardParams billiard_params(double epsilon, double abs_tol) {
    BilliardParams params;
    params.epsilon = epsilon;
    params.quadrature.abs_tol = abs_tol;
    return params;
}

Disk2Spec disk(std::pair<double, double> p_radius) {
    return Disk2Spec{p_radius.first, p_radius.second};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "toric-domain capacities, embedding verdicts and billiard actions";
    m.attr("__version__") = "1.0.0";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NumericError>(m, "NumericError", base.ptr());

    py::class_<Region>(m, "Region")
        .def_static(
            "from_json", [](const std::string& text) { return Region::from_json_text(text); },
            py::arg("text"), "Parse a region from its JSON text form.")
        .def("to_json", [](const Region& r) { return r.to_json().dump(2); })
        .def("to_dict", [](const Region& r) { return to_py(r.to_json()); })
        .def_property_readonly("dim", &Region::dim)
        .def(
            "contains",
            [](const Region& r, const std::vector<double>& p) {
                return r.contains(std::span<const double>(p));
            },
            py::arg("point"))
        .def(
            "classify",
            [](const Region& r, const std::vector<double>& p, double tol) {
                return std::string(to_string(r.classify(std::span<const double>(p), tol)));
            },
            py::arg("point"), py::arg("tol") = kBoundaryTol)
        .def(
            "gauge",
            [](const Region& r, const std::vector<double>& u) {
                return r.gauge(std::span<const double>(u));
            },
            py::arg("direction"))
        .def("gauge_error_bound", &Region::gauge_error_bound)
        .def("axis_extents", &Region::axis_extents)
        .def("scaled", &Region::scaled, py::arg("factor"))
        .def("__repr__", [](const Region& r) {
            return "Region(" + r.to_json().dump() + ")";
        });

    m.def(
        "gromov_width",
        [](const Region& r, bool prefer_closed_form, int grid_size, std::uint64_t seed) {
            return to_py(to_json(gromov_width(r, capacity_options(prefer_closed_form, grid_size, seed))));
        },
        py::arg("region"), py::arg("prefer_closed_form") = true, py::arg("grid_size") = 0,
        py::arg("seed") = 0x5eedULL);
    m.def(
        "cube_capacity",
        [](const Region& r, bool prefer_closed_form, int grid_size, std::uint64_t seed) {
            return to_py(to_json(cube_capacity(r, capacity_options(prefer_closed_form, grid_size, seed))));
        },
        py::arg("region"), py::arg("prefer_closed_form") = true, py::arg("grid_size") = 0,
        py::arg("seed") = 0x5eedULL);
    m.def(
        "capacity_report",
        [](const Region& r, bool prefer_closed_form, int grid_size, std::uint64_t seed) {
            return to_py(to_json(capacity_report(r, capacity_options(prefer_closed_form, grid_size, seed))));
        },
        py::arg("region"), py::arg("prefer_closed_form") = true, py::arg("grid_size") = 0,
        py::arg("seed") = 0x5eedULL);

    m.def(
        "includes",
        [](const Region& inner, const Region& outer, double tol, int grid_size) {
            InclusionOptions opt;
            opt.tol = tol;
            opt.grid_size = grid_size;
            return to_py(to_json(includes(inner, outer, opt)));
        },
        py::arg("inner"), py::arg("outer"), py::arg("tol") = 1e-9, py::arg("grid_size") = 0);

    m.def(
        "validate_flags",
        [](const Region& r, int samples, std::uint64_t seed, double tol) {
            ValidationOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            opt.tol = tol;
            return to_py(to_json(validate_flags(r, opt)));
        },
        py::arg("region"), py::arg("samples") = 2048, py::arg("seed") = 0x5eedULL,
        py::arg("tol") = kBoundaryTol);

    m.def(
        "classify_case",
        [](const Region& source, const Region& target) {
            return std::string(to_string(classify_case(source, target)));
        },
        py::arg("source"), py::arg("target"));
    m.def(
        "decide_embedding",
        [](const Region& source, const Region& target, double tol, int grid_size,
           std::uint64_t seed) {
            EmbedOptions opt;
            opt.tol = tol;
            opt.grid_size = grid_size;
            opt.seed = seed;
            return to_py(to_json(decide_embedding(source, target, opt)));
        },
        py::arg("source"), py::arg("target"), py::arg("tol") = 1e-9, py::arg("grid_size") = 0,
        py::arg("seed") = 0x5eedULL);
    m.def("holder_min_scale", &holder_min_scale, py::arg("n"), py::arg("p"), py::arg("q"));
    m.def("lagrangian_to_toric", &lagrangian_to_toric, py::arg("balanced_factor"));

    m.def(
        "hamiltonian",
        [](double epsilon, double x, double y) {
            return hamiltonian(billiard_params(epsilon, QuadratureConfig{}.abs_tol), x, y);
        },
        py::arg("epsilon"), py::arg("x"), py::arg("y"));
    m.def(
        "action",
        [](double epsilon, double c, double abs_tol) {
            const ActionValue a = action(billiard_params(epsilon, abs_tol), c);
            return py::dict(py::arg("value") = a.value, py::arg("error") = a.error_estimate);
        },
        py::arg("epsilon"), py::arg("c"), py::arg("abs_tol") = QuadratureConfig{}.abs_tol);
    m.def("action_limit", &action_limit, py::arg("c"));
    m.def(
        "action_inverse",
        [](double epsilon, double a, double abs_tol) {
            return action_inverse(billiard_params(epsilon, abs_tol), a);
        },
        py::arg("epsilon"), py::arg("a"), py::arg("abs_tol") = QuadratureConfig{}.abs_tol);
    m.def(
        "moment_map_phi",
        [](double epsilon, const std::vector<double>& x, const std::vector<double>& y) {
            return moment_map_phi(billiard_params(epsilon, QuadratureConfig{}.abs_tol),
                                  std::span<const double>(x), std::span<const double>(y));
        },
        py::arg("epsilon"), py::arg("x"), py::arg("y"));
    m.def(
        "torus_action_image",
        [](double epsilon, const std::vector<double>& c, double abs_tol) {
            return torus_action_image(billiard_params(epsilon, abs_tol),
                                      std::span<const double>(c));
        },
        py::arg("epsilon"), py::arg("c"), py::arg("abs_tol") = QuadratureConfig{}.abs_tol);
    m.def(
        "p_epsilon_contains",
        [](const Region& A, double epsilon, const std::vector<double>& x,
           const std::vector<double>& y) {
            return p_epsilon_contains(A, epsilon, std::span<const double>(x),
                                      std::span<const double>(y));
        },
        py::arg("A"), py::arg("epsilon"), py::arg("x"), py::arg("y"));
    m.def(
        "action_profile",
        [](double epsilon, const std::vector<double>& cs, double abs_tol) {
            if (epsilon == 0.0)
                return to_py(to_json(action_limit_profile(std::span<const double>(cs))));
            return to_py(to_json(
                action_profile(billiard_params(epsilon, abs_tol), std::span<const double>(cs))));
        },
        py::arg("epsilon"), py::arg("cs"), py::arg("abs_tol") = QuadratureConfig{}.abs_tol);

    m.def("bidisk_region", &bidisk_region, py::arg("scale") = 1.0);
    m.def(
        "equivalent",
        [](std::pair<double, double> a_first, std::pair<double, double> a_second,
           std::pair<double, double> b_first, std::pair<double, double> b_second, double rel_tol) {
            return equivalent(ProductSpec{disk(a_first), disk(a_second)},
                              ProductSpec{disk(b_first), disk(b_second)}, rel_tol);
        },
        py::arg("a_first"), py::arg("a_second"), py::arg("b_first"), py::arg("b_second"),
        py::arg("rel_tol") = 1e-12,
        "Equivalence of two disk products; each factor is a (p, radius) pair.");
    m.def(
        "rigidity_classify",
        [](double p, double q, double r, double s) {
            return std::string(to_string(rigidity_classify(p, q, r, s)));
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"));
    m.def("rigidity_table", [] { return to_py(rigidity_table_json()["rows"]); });
    m.def(
        "nonrigidity_witnesses",
        [](double tol, int grid_size) {
            InclusionOptions opt;
            opt.tol = tol;
            opt.grid_size = grid_size;
            return to_py(to_json(nonrigidity_witnesses(opt)));
        },
        py::arg("tol") = 1e-9, py::arg("grid_size") = 0);
    m.def(
        "bidisk_optimal_scales",
        [](double p) {
            const BidiskScales s = bidisk_optimal_scales(p);
            return py::dict(py::arg("into_polydisk") = s.into_polydisk,
                            py::arg("from_polydisk") = s.from_polydisk);
        },
        py::arg("p"));
    m.def(
        "bidisk_curve_samples",
        [](int n) {
            py::list out;
            for (const auto& s : bidisk_curve_samples(n))
                out.append(py::dict(py::arg("alpha") = s.alpha, py::arg("x") = s.x,
                                    py::arg("y") = s.y));
            return out;
        },
        py::arg("n"));
}
