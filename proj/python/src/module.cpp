#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "localsep/cli.hpp"
#include "localsep/decomposition.hpp"
#include "localsep/errors.hpp"
#include "localsep/generators.hpp"
#include "localsep/graph.hpp"
#include "localsep/io.hpp"
#include "localsep/local_cut.hpp"
#include "localsep/pipeline.hpp"
#include "localsep/two_separators.hpp"

namespace py = pybind11;
using namespace localsep;

namespace {

Graph graph_from_python(std::size_t n, const std::vector<py::tuple>& edges,
                        std::vector<std::string> labels, std::vector<std::pair<double, double>> coords) {
    std::vector<EdgeInput> in;
    in.reserve(edges.size());
    for (const auto& t : edges) {
        if (t.size() != 2 && t.size() != 3) throw py::value_error("edges are (u, v) or (u, v, weight)");
        EdgeInput e{t[0].cast<VertexId>(), t[1].cast<VertexId>()};
        if (t.size() == 3) e.weight = t[2].cast<Weight>();
        in.push_back(e);
    }
    std::vector<Point> points;
    for (auto [x, y] : coords) points.push_back({x, y});
    return Graph::from_edges(n, in, std::move(labels), std::move(points));
}

template <class F>
auto unlocked(F f) {
    py::gil_scoped_release release;
    return f();
}

}  // namespace

PYBIND11_MODULE(_localsep, m) {
    m.doc() = "Local cutvertices, local 2-separators and graph decompositions.";

    auto base = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<DataIntegrityError>(m, "DataIntegrityError", PyExc_RuntimeError);
    (void)base;

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_python), py::arg("vertex_count"), py::arg("edges"),
             py::arg("labels") = std::vector<std::string>{},
             py::arg("coordinates") = std::vector<std::pair<double, double>>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("max_weight", &Graph::max_weight)
        .def("degree", &Graph::degree)
        .def("label", &Graph::label)
        .def("adjacent", &Graph::adjacent)
        .def("find_edge", &Graph::find_edge)
        .def("neighbors",
             [](const Graph& g, VertexId v) {
                 std::vector<VertexId> out;
                 for (const Arc& a : g.neighbors(v)) out.push_back(a.to);
                 return out;
             })
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::tuple<VertexId, VertexId, Weight>> out;
                 for (const EdgeInfo& e : g.edges()) out.emplace_back(e.u, e.v, e.weight);
                 return out;
             })
        .def("coordinates",
             [](const Graph& g) {
                 std::vector<std::pair<double, double>> out;
                 if (g.has_coordinates())
                     for (VertexId v = 0; v < g.vertex_count(); ++v) out.emplace_back(g.coordinate(v).x, g.coordinate(v).y);
                 return out;
             })
        .def("induced_subgraph", [](const Graph& g, std::vector<VertexId> vs) { return g.induced_subgraph(vs); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<Ball>(m, "Ball")
        .def_readonly("root", &Ball::root)
        .def_readonly("diameter", &Ball::diameter)
        .def_readonly("vertices", &Ball::vertices)
        .def_readonly("distances", &Ball::distances)
        .def_readonly("edges", &Ball::edges)
        .def_property_readonly("size", &Ball::size);

    m.def("ball", &ball, py::arg("graph"), py::arg("v"), py::arg("d"));
    m.def("max_ball_size", [](const Graph& g, Distance d, unsigned jobs) { return unlocked([&] { return max_ball_size(g, d, jobs); }); },
          py::arg("graph"), py::arg("d"), py::arg("jobs") = 0);

    m.def("find_local_cutvertices",
          [](const Graph& g, Distance d, unsigned jobs) { return unlocked([&] { return find_local_cutvertices(g, d, jobs); }); },
          py::arg("graph"), py::arg("d"), py::arg("jobs") = 0);
    m.def("is_local_cutvertex", &is_local_cutvertex, py::arg("graph"), py::arg("v"), py::arg("d"));

    py::enum_<Verdict>(m, "Verdict")
        .value("NestedByEdge", Verdict::NestedByEdge)
        .value("NestedByManyComponents", Verdict::NestedByManyComponents)
        .value("Cycle", Verdict::Cycle)
        .value("Unresolved", Verdict::Unresolved);

    py::class_<ConnectivityGraph>(m, "ConnectivityGraph")
        .def_readonly("v0", &ConnectivityGraph::v0)
        .def_readonly("v1", &ConnectivityGraph::v1)
        .def_readonly("d", &ConnectivityGraph::d)
        .def_readonly("nodes", &ConnectivityGraph::nodes)
        .def_readonly("edges", &ConnectivityGraph::edges)
        .def_readonly("component", &ConnectivityGraph::component)
        .def_readonly("component_count", &ConnectivityGraph::component_count)
        .def("disconnected", &ConnectivityGraph::disconnected);

    py::class_<SeparatorRecord>(m, "SeparatorRecord")
        .def_readonly("v0", &SeparatorRecord::v0)
        .def_readonly("v1", &SeparatorRecord::v1)
        .def_readonly("nested", &SeparatorRecord::nested)
        .def_property_readonly("verdict", [](const SeparatorRecord& r) { return r.cycle_data.verdict; })
        .def_property_readonly("cycle", [](const SeparatorRecord& r) { return r.cycle_data.cycle; })
        .def("__repr__", [](const SeparatorRecord& r) {
            return "<SeparatorRecord " + std::to_string(r.v0) + "," + std::to_string(r.v1) + " " +
                   std::string(to_string(r.cycle_data.verdict)) + (r.nested ? " nested>" : ">");
        });

    m.def("connectivity_graph", &connectivity_graph, py::arg("graph"), py::arg("v0"), py::arg("v1"), py::arg("d"));
    m.def("find_local_2separators",
          [](const Graph& g, Distance d, unsigned jobs) { return unlocked([&] { return find_local_2separators(g, d, jobs); }); },
          py::arg("graph"), py::arg("d"), py::arg("jobs") = 0);
    m.def("filter_totally_nested",
          [](std::vector<SeparatorRecord> records, unsigned jobs) {
              return unlocked([&] { return filter_totally_nested(std::move(records), jobs); });
          },
          py::arg("records"), py::arg("jobs") = 0);

    py::enum_<NodeKind>(m, "NodeKind").value("Bag", NodeKind::Bag).value("Separator", NodeKind::Separator);

    py::class_<DecompositionNode>(m, "DecompositionNode")
        .def_readonly("kind", &DecompositionNode::kind)
        .def_readonly("vertices", &DecompositionNode::vertices);
    py::class_<DecompositionGraph>(m, "DecompositionGraph")
        .def_readonly("nodes", &DecompositionGraph::nodes)
        .def_property_readonly("edges",
                               [](const DecompositionGraph& dg) {
                                   std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> out;
                                   for (const auto& e : dg.edges) out.emplace_back(e.a, e.b, e.multiplicity);
                                   return out;
                               })
        .def_readonly("simplified", &DecompositionGraph::simplified)
        .def_property_readonly("bag_count", &DecompositionGraph::bag_count)
        .def_property_readonly("separator_count", &DecompositionGraph::separator_count)
        .def("to_dot", [](const DecompositionGraph& dg, const Graph& g) {
            std::ostringstream s;
            io::write_dot(s, g, dg);
            return s.str();
        });

    m.def("build_from_cutvertices",
          [](const Graph& g, Distance d, std::vector<VertexId> cuts) { return build_from_cutvertices(g, d, cuts); },
          py::arg("graph"), py::arg("d"), py::arg("cutvertices"));
    m.def("build_from_2separators",
          [](const Graph& g, Distance d, std::vector<SeparatorRecord> nested) {
              return build_from_2separators(g, d, nested);
          },
          py::arg("graph"), py::arg("d"), py::arg("nested"));
    m.def("suppress_degree_two_nodes", &suppress_degree_two_nodes, py::arg("decomposition"));

    m.def("prune_degree_one", &prune_degree_one, py::arg("graph"));
    m.def("suppress_degree_two", &suppress_degree_two, py::arg("graph"));
    m.def("sweep_d",
          [](const Graph& g, std::vector<Distance> ds, unsigned jobs) {
              auto rows = unlocked([&] { return sweep_d(g, ds, jobs); });
              std::vector<std::tuple<Distance, std::size_t, std::size_t, std::size_t>> out;
              for (const auto& r : rows) out.emplace_back(r.d, r.cutvertices, r.clusters, r.largest_cluster);
              return out;
          },
          py::arg("graph"), py::arg("d_values"), py::arg("jobs") = 0);

    m.def("load",
          [](const std::filesystem::path& edges, std::optional<std::filesystem::path> nodes, double scale) {
              return io::load(nodes, edges, scale).graph;
          },
          py::arg("edges"), py::arg("nodes") = py::none(), py::arg("scale") = 1.0);

    m.def("run_cli",
          [](std::vector<std::string> args) {
              std::ostringstream out, err;
              int code = unlocked([&] { return cli::run(args, out, err); });
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");

    auto g = m.def_submodule("generators");
    g.def("cycle", &gen::cycle, py::arg("n"), py::arg("weight") = 1);
    g.def("path", &gen::path, py::arg("n"));
    g.def("complete", &gen::complete, py::arg("n"));
    g.def("star", &gen::star, py::arg("leaves"));
    g.def("bowtie", &gen::bowtie);
    g.def("k4_ring", &gen::k4_ring, py::arg("k") = 6);
    g.def("random_connected_graph", &gen::random_connected_graph, py::arg("n"), py::arg("p"),
          py::arg("max_weight"), py::arg("seed"));
    g.def("random_geometric_graph", &gen::random_geometric_graph, py::arg("n"), py::arg("target_edges"),
          py::arg("spacing"), py::arg("seed"));
}
