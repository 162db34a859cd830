#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ori/certifier.hpp"
#include "ori/formats.hpp"
#include "ori/horizon.hpp"

namespace py = pybind11;
using namespace ori;

namespace {

py::tuple point_tuple(Point p) { return py::make_tuple(p.x, p.y); }

Point tuple_point(py::handle h) {
    auto t = h.cast<std::pair<int, int>>();
    return {t.first, t.second};
}

}  // namespace

PYBIND11_MODULE(_oritatami, m) {
    m.doc() = "oritatami folding and curve-drawing workbench";

    py::class_<Configuration>(m, "Configuration")
        .def(py::init<>())
        .def_property_readonly("path",
                               [](const Configuration& c) {
                                   py::list out;
                                   for (Point p : c.path) out.append(point_tuple(p));
                                   return out;
                               })
        .def_readonly("beads", &Configuration::beads)
        .def_readonly("bonds", &Configuration::bonds)
        .def("energy", &Configuration::energy)
        .def("canonical", &Configuration::canonical);

    py::class_<FoldResult>(m, "FoldResult")
        .def_property_readonly("kind",
                               [](const FoldResult& r) {
                                   switch (r.kind) {
                                       case FoldResult::Kind::Terminal: return "terminal";
                                       case FoldResult::Kind::Nondeterministic:
                                           return "nondeterministic";
                                       case FoldResult::Kind::Blocked: return "blocked";
                                       default: return "step-limit";
                                   }
                               })
        .def_readonly("config", &FoldResult::config)
        .def_readonly("stop_step", &FoldResult::stop_step)
        .def_property_readonly("steps",
                               [](const FoldResult& r) { return r.trace.size(); });

    py::class_<OritatamiSystem>(m, "OritatamiSystem")
        .def_readonly("alphabet", &OritatamiSystem::alphabet)
        .def_readonly("delay", &OritatamiSystem::delay)
        .def_readonly("arity", &OritatamiSystem::arity)
        .def_readonly("seed", &OritatamiSystem::seed);

    m.def("parse_os_file", &parse_os_file);
    m.def("emit_os_file", &emit_os_file);
    m.def(
        "fold",
        [](const OritatamiSystem& sys, size_t max_beads, const std::string& tie_mode) {
            return fold(sys, max_beads,
                        tie_mode == "position" ? TieMode::Position : TieMode::Conformation);
        },
        py::arg("system"), py::arg("max_beads"), py::arg("tie_mode") = "conformation");

    m.def("expand", [](const std::string& name, int n) {
        return expand(name == "minkowski" ? minkowski_system() : koch_system(), n);
    });
    m.def("curve_vertices", [](const std::string& name, int n) {
        bool mink = name == "minkowski";
        Curve c = interpret_turtle(expand(mink ? minkowski_system() : koch_system(), n),
                                   mink ? minkowski_semantics() : koch_semantics());
        py::list out;
        for (Point p : c.vertices) out.append(point_tuple(p));
        return out;
    });

    m.def(
        "horizon_key",
        [](const Configuration& c, size_t i, int delay, int arity) {
            Transcript t;
            t.kind = Transcript::Kind::Finite;
            return extract_horizon(c, i, delay, arity, t, 0).hex_key();
        },
        py::arg("config"), py::arg("i"), py::arg("delay"), py::arg("arity"));

    m.def(
        "certify",
        [](const std::string& curve, int d, int l, long long p_o, long long p_pl,
           const std::vector<int>& levels, size_t lo, size_t hi) {
            CertificateReport r =
                certify(curve == "minkowski" ? BuiltinCurve::Minkowski : BuiltinCurve::Koch,
                        ShapeParams{d, l}, p_o, p_pl, levels, lo, hi);
            py::dict out;
            out["report"] = r.render();
            out["thm4_holds"] = r.thm4_holds;
            out["thm5_evidence"] = r.thm5_evidence;
            py::list depths;
            for (const auto& lv : r.levels) depths.append(lv.profile.max_depth);
            out["max_depths"] = depths;
            return out;
        },
        py::arg("curve"), py::arg("d"), py::arg("l"), py::arg("p_o"), py::arg("p_pl"),
        py::arg("levels"), py::arg("window_lo"), py::arg("window_hi"));

    m.def("pigeonhole_threshold", [](long long p_o, long long p_pl, long long depth) {
        return pigeonhole_threshold(p_o, p_pl, depth).str();
    });

    m.def("render_svg",
          [](const Configuration& c) { return render_svg(c, nullptr); });

    m.def("hex_distance", [](py::handle a, py::handle b) {
        return hex_distance(tuple_point(a), tuple_point(b));
    });
}
