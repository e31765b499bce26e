#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orthogrid/clique_grid.hpp"
#include "orthogrid/colouring.hpp"
#include "orthogrid/embed.hpp"
#include "orthogrid/experiments.hpp"
#include "orthogrid/geo.hpp"
#include "orthogrid/graph.hpp"
#include "orthogrid/io.hpp"
#include "orthogrid/oracle.hpp"

namespace py = pybind11;
using namespace orthogrid;

namespace {

HParams params(std::size_t m, std::size_t d, std::size_t t) {
    HParams p{m, d, t};
    p.validate();
    return p;
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph &g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.num_edges());
    g.for_each_edge([&](Vertex u, Vertex v) { out.emplace_back(u, v); });
    return out;
}

template <typename Report>
std::string report_text(const Report &report, const std::string &format) {
    std::ostringstream out;
    emit_report(out, report, format == "json" ? ReportFormat::Json : ReportFormat::Csv);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Orthogonal colourings of clique grids and random geometric graphs";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const std::overflow_error &e) {
            PyErr_SetString(PyExc_OverflowError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def_static(
            "from_edges",
            [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges) { return Graph::from_edges(n, edges); },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbours",
             [](const Graph &g, Vertex v) {
                 const auto row = g.neighbours(v);
                 return std::vector<Vertex>(row.begin(), row.end());
             })
        .def("edges", &edge_pairs)
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__len__", &Graph::num_vertices)
        .def("__repr__", [](const Graph &g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", edges=" + std::to_string(g.num_edges()) + ")";
        });

    py::class_<ColouringPair>(m, "ColouringPair")
        .def(py::init([](std::size_t n, std::vector<Colour> c1, std::vector<Colour> c2) {
                 return ColouringPair{n, std::move(c1), std::move(c2)};
             }),
             py::arg("palette_size"), py::arg("c1"), py::arg("c2"))
        .def_readwrite("palette_size", &ColouringPair::palette_size)
        .def_readwrite("c1", &ColouringPair::c1)
        .def_readwrite("c2", &ColouringPair::c2)
        .def("__eq__", [](const ColouringPair &a, const ColouringPair &b) { return a == b; })
        .def("to_json", [](const ColouringPair &p) { return io::to_json(p).dump(); })
        .def_static("from_json", [](const std::string &s) { return io::colouring_from_json(io::json::parse(s)); });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("proper_c1", &VerificationReport::proper_c1)
        .def_readonly("proper_c2", &VerificationReport::proper_c2)
        .def_readonly("orthogonal", &VerificationReport::orthogonal)
        .def_property_readonly("first_violation",
                               [](const VerificationReport &r) -> py::object {
                                   if (!r.first_violation)
                                       return py::none();
                                   const Violation &v = *r.first_violation;
                                   return py::make_tuple(std::string(to_string(v.kind)), v.u, v.v);
                               })
        .def("ok", &VerificationReport::ok)
        .def("__bool__", &VerificationReport::ok);

    m.def("verify", &verify, py::arg("graph"), py::arg("pair"));
    m.def("is_orthogonal", &is_orthogonal, py::arg("graph"), py::arg("pair"));
    m.def("colours_used", &colours_used);
    m.def("brute_force_ochi", &brute_force_ochi, py::arg("graph"), py::arg("max_colours"),
          py::arg("guard") = kDefaultOracleGuard);

    m.def("build_H", [](std::size_t mm, std::size_t d, std::size_t t) { return build_H(params(mm, d, t)); },
          py::arg("m"), py::arg("d"), py::arg("t"));
    m.def("build_L", [](std::size_t mm, std::size_t d, std::size_t t) { return build_L(params(mm, d, t)); },
          py::arg("m"), py::arg("d"), py::arg("t"));
    m.def("colour_H", [](std::size_t mm, std::size_t d, std::size_t t) { return colour_H(params(mm, d, t)); },
          py::arg("m"), py::arg("d"), py::arg("t"));
    m.def("colour_L", [](std::size_t mm, std::size_t d, std::size_t t) { return colour_L(params(mm, d, t)); },
          py::arg("m"), py::arg("d"), py::arg("t"));
    m.def("ochi_H", [](std::size_t mm, std::size_t d, std::size_t t) { return ochi_H(params(mm, d, t)); },
          py::arg("m"), py::arg("d"), py::arg("t"));
    m.def("ochi_L_upper", [](std::size_t mm, std::size_t d, std::size_t t) { return ochi_L_upper(params(mm, d, t)); },
          py::arg("m"), py::arg("d"), py::arg("t"));
    m.def(
        "classify_case",
        [](std::size_t mm, std::size_t d, std::size_t t) { return std::string(to_string(classify_case(params(mm, d, t)))); },
        py::arg("m"), py::arg("d"), py::arg("t"));
    m.def("strong_product", &strong_product);
    m.def("compose_orthogonal", &compose_orthogonal);

    m.def(
        "sample_rgg",
        [](std::size_t n, double r, std::uint64_t seed) {
            RggSample s = sample_rgg(n, r, seed);
            std::vector<std::pair<double, double>> pts;
            pts.reserve(s.points.size());
            for (const Point &p : s.points.points)
                pts.emplace_back(p.x, p.y);
            return py::make_tuple(pts, std::move(s.graph));
        },
        py::arg("n"), py::arg("r"), py::arg("seed"), "Returns (points, graph).");

    m.def(
        "dense_params",
        [](std::size_t n, double alpha) {
            const DenseParams p = derive_dense_params(n, alpha);
            py::dict d;
            d["n"] = p.n;
            d["alpha"] = p.alpha;
            d["r"] = p.r;
            d["t"] = p.t;
            d["m"] = p.m;
            d["l"] = p.l;
            d["d"] = p.d;
            return d;
        },
        py::arg("n"), py::arg("alpha"));

    // Pipelines return the ColouredRGG JSON text; the Python side parses it.
    m.def(
        "colour_rgg_dense",
        [](std::size_t n, double alpha, std::uint64_t seed) {
            const DenseParams dp = derive_dense_params(n, alpha);
            return io::to_json(colour_rgg_dense(sample_rgg(n, dp.r, seed), dp)).dump();
        },
        py::arg("n"), py::arg("alpha"), py::arg("seed"));
    m.def(
        "colour_rgg_optimal",
        [](std::size_t mm, std::size_t t, double r, std::uint64_t seed, std::optional<std::size_t> d) {
            OptimalParams op = derive_optimal_params(mm, t, r);
            if (d)
                op.d = *d;
            return io::to_json(colour_rgg_optimal(sample_rgg(op.n, r, seed), op)).dump();
        },
        py::arg("m"), py::arg("t"), py::arg("r"), py::arg("seed"), py::arg("d") = py::none());

    m.def(
        "theorem_one_suite",
        [](std::size_t max_m, std::size_t max_d, std::size_t max_t, std::size_t oracle_max, const std::string &format) {
            return report_text(run_theorem_one_suite(max_m, max_d, max_t, oracle_max), format);
        },
        py::arg("max_m"), py::arg("max_d"), py::arg("max_t"), py::arg("oracle_max_vertices") = 12,
        py::arg("format") = "json");
    m.def(
        "dense_campaign",
        [](std::vector<std::size_t> n_values, double alpha, std::size_t trials, std::uint64_t seed,
           const std::string &format) {
            py::gil_scoped_release release;
            return report_text(run_dense_campaign({std::move(n_values), alpha, trials, seed, 0}), format);
        },
        py::arg("n_values"), py::arg("alpha") = 0.25, py::arg("trials") = 10, py::arg("seed") = 1,
        py::arg("format") = "json");
    m.def(
        "optimal_campaign",
        [](std::vector<std::tuple<std::size_t, std::size_t, double>> instances, std::size_t trials, std::uint64_t seed,
           const std::string &format) {
            OptimalConfig cfg{{}, trials, seed, 0};
            for (const auto &[mm, t, c] : instances)
                cfg.instances.push_back({mm, t, c, std::nullopt});
            py::gil_scoped_release release;
            return report_text(run_optimal_campaign(cfg), format);
        },
        py::arg("instances"), py::arg("trials") = 10, py::arg("seed") = 1, py::arg("format") = "json");
}
