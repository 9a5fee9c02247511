#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groverlab/analysis.hpp"

namespace py = pybind11;
using namespace groverlab;

namespace {

std::vector<std::vector<cplx>> mat_rows(const Mat2c& m) {
    return {{m.a00, m.a01}, {m.a10, m.a11}};
}

std::vector<cplx> vec_entries(const Vec2c& v) { return {v[0], v[1]}; }

Engine engine_from(const std::string& name) { return parse_engine(name); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Generalized amplitude-amplification kernel laboratory (C++ core)";

    py::class_<PhaseSet>(mod, "PhaseSet")
        .def(py::init<double, double, double, double>(), py::arg("theta1"), py::arg("theta2"),
             py::arg("phi1"), py::arg("phi2"))
        .def_readonly("theta1", &PhaseSet::theta1)
        .def_readonly("theta2", &PhaseSet::theta2)
        .def_readonly("phi1", &PhaseSet::phi1)
        .def_readonly("phi2", &PhaseSet::phi2)
        .def_readonly("alpha", &PhaseSet::alpha)
        .def_readonly("beta", &PhaseSet::beta)
        .def_readonly("gamma", &PhaseSet::gamma)
        .def_readonly("delta", &PhaseSet::delta)
        .def("shifted", &PhaseSet::shifted, py::arg("theta_offset"), py::arg("phi_offset"))
        .def("__repr__", [](const PhaseSet& p) {
            return "PhaseSet(theta1=" + std::to_string(p.theta1) +
                   ", theta2=" + std::to_string(p.theta2) + ", phi1=" + std::to_string(p.phi1) +
                   ", phi2=" + std::to_string(p.phi2) + ")";
        });

    py::class_<ProblemSpec>(mod, "ProblemSpec")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("n"), py::arg("m"))
        .def_readonly("n_total", &ProblemSpec::n_total)
        .def_readonly("m_marked", &ProblemSpec::m_marked)
        .def("ratio", &ProblemSpec::ratio)
        .def("__repr__", [](const ProblemSpec& s) {
            return "ProblemSpec(n=" + std::to_string(s.n_total) +
                   ", m=" + std::to_string(s.m_marked) + ")";
        });

    py::class_<Kernel2>(mod, "Kernel2")
        .def_property_readonly("g", [](const Kernel2& k) { return mat_rows(k.g); })
        .def_property_readonly("g1", [](const Kernel2& k) { return mat_rows(k.g1); })
        .def_property_readonly("g2", [](const Kernel2& k) { return mat_rows(k.g2); })
        .def_property_readonly("trace", [](const Kernel2& k) { return k.trace_g; })
        .def_property_readonly("det", [](const Kernel2& k) { return k.det_g; })
        .def_property_readonly("k_scalar", [](const Kernel2& k) { return k.k_scalar; });

    py::class_<EigenSystem>(mod, "EigenSystem")
        .def_readonly("xi1", &EigenSystem::xi1)
        .def_readonly("xi2", &EigenSystem::xi2)
        .def_readonly("lambda1", &EigenSystem::lambda1)
        .def_readonly("lambda2", &EigenSystem::lambda2)
        .def_readonly("delta_lambda", &EigenSystem::delta_lambda)
        .def_readonly("degenerate", &EigenSystem::degenerate)
        .def_property_readonly("g1_vec", [](const EigenSystem& e) { return vec_entries(e.g1_vec); })
        .def_property_readonly("g2_vec", [](const EigenSystem& e) { return vec_entries(e.g2_vec); })
        .def_property_readonly("wrapped_gap", [](const EigenSystem& e) { return wrapped_gap(e); });

    mod.def("build_kernel", &build_kernel, py::arg("phases"), py::arg("spec"));
    mod.def("eigensystem", &eigensystem, py::arg("kernel"));
    mod.def("matching_defect", &matching_defect, py::arg("phases"));
    mod.def("is_matched", &is_matched, py::arg("phases"), py::arg("tol") = kDefaultMatchTol);
    mod.def("evolve_probability", &evolve_probability, py::arg("phases"), py::arg("spec"),
            py::arg("m"));
    mod.def("spectral_probability",
            py::overload_cast<const PhaseSet&, const ProblemSpec&, std::int64_t>(
                &spectral_probability),
            py::arg("phases"), py::arg("spec"), py::arg("m"));
    mod.def("predicted_peak_m", &predicted_peak_m, py::arg("phases"), py::arg("spec"));
    mod.def(
        "g1_alignment",
        [](const PhaseSet& phases, const ProblemSpec& spec) {
            const AlignmentReport r = g1_alignment(phases, spec);
            return py::make_tuple(r.overlap_w, r.product_overlap);
        },
        py::arg("phases"), py::arg("spec"));

    mod.def("run_full", &run_full, py::arg("n"), py::arg("marked"), py::arg("phases"),
            py::arg("m_max"), "Full-statevector probability series; element m is p(m)");

    mod.def(
        "sweep",
        [](const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m_max,
           const std::string& engine) {
            const SweepSeries s = sweep(phases, spec, m_max, engine_from(engine));
            std::vector<std::pair<std::int64_t, double>> pts, pks;
            for (const SweepPoint& p : s.points) pts.emplace_back(p.m, p.p);
            for (const SweepPoint& p : s.peaks) pks.emplace_back(p.m, p.p);
            return py::make_tuple(pts, pks);
        },
        py::arg("phases"), py::arg("spec"), py::arg("m_max"), py::arg("engine") = "reduced",
        "Returns (points, peaks) as lists of (m, p) tuples");

    mod.def(
        "figure_preset",
        [](const std::string& id) {
            const FigurePreset p = figure_preset(parse_figure_id(id));
            return py::make_tuple(p.phases, p.spec, p.m_max);
        },
        py::arg("id"), "Returns (phases, spec, m_max) for fig1|fig2|fig3");

    mod.def(
        "cross_validate",
        [](const PhaseSet& phases, const ProblemSpec& spec, std::int64_t m_max, double tol) {
            const CrossValidationReport r = cross_validate(phases, spec, m_max, tol);
            py::dict d;
            d["n"] = r.n;
            d["m_marked"] = r.m_marked;
            d["m_max"] = r.m_max;
            d["tol"] = r.tol;
            d["max_abs_diff"] = r.max_abs_diff;
            d["pass"] = r.pass;
            d["trace_computed"] = r.trace.computed;
            d["trace_closed_form"] = r.trace.closed_form;
            d["trace_sign_variant"] = r.trace.sign_variant;
            return d;
        },
        py::arg("phases"), py::arg("spec"), py::arg("m_max") = 200, py::arg("tol") = 1e-10);

    mod.attr("__version__") = "0.1.0";
}
