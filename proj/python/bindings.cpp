#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spg/cli.hpp"
#include "spg/constructions.hpp"
#include "spg/error.hpp"
#include "spg/geodesics.hpp"
#include "spg/grid.hpp"
#include "spg/isomorphism.hpp"
#include "spg/spg.hpp"
#include "spg/verify.hpp"

namespace py = pybind11;
using namespace spg;

namespace {

// Python ints for counts that may not fit in 64 bits.
py::int_ to_py(const BigInt& n) { return py::int_(py::str(n.str())); }

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["stats"] = r.stats;
  if (r.witness) {
    py::dict w;
    w["description"] = r.witness->description;
    w["tuples"] = r.witness->tuples;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

ConstructionResult family(const std::string& name, const std::vector<std::size_t>& params) {
  auto one = [&] {
    if (params.size() != 1) throw PreconditionError("family " + name + " takes one parameter");
    return params[0];
  };
  if (name == "path") return path_base(one());
  if (name == "complete") return complete_base(one());
  if (name == "cycle") return even_cycle_base(one());
  if (name == "oddhost") return odd_cycle_host_base(one());
  if (name == "hypercube") return hypercube_base(one());
  if (name == "parallel") {
    if (params.size() != 2) throw PreconditionError("family parallel takes two parameters");
    return parallel_paths(params[0], params[1]);
  }
  throw PreconditionError("unknown family '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shortest path reconfiguration graphs";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<LimitExceededError>(m, "LimitExceededError", error.ptr());
  py::register_exception<NoGeodesicError>(m, "NoGeodesicError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<GraphFormatError>(m, "GraphFormatError", error.ptr());
  py::register_exception<UnknownVertexError>(m, "UnknownVertexError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::vector<Vertex> vertices, const std::vector<VertexPair>& edges) {
             return Graph::from_edges(std::move(vertices), edges);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("vertices", &Graph::vertices)
      .def_property_readonly("edges", &Graph::named_edges)
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("adjacent",
           [](const Graph& g, const Vertex& u, const Vertex& v) { return g.adjacent(g.index_of(u), g.index_of(v)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<BaseInstance>(m, "Instance")
      .def(py::init<Graph, Vertex, Vertex>(), py::arg("graph"), py::arg("source"), py::arg("target"))
      .def_property_readonly("graph", &BaseInstance::graph)
      .def_property_readonly("source", &BaseInstance::source)
      .def_property_readonly("target", &BaseInstance::target);

  py::class_<SpGraph>(m, "SpGraph")
      .def("order", &SpGraph::order)
      .def("size", &SpGraph::size)
      .def_property_readonly("distance", &SpGraph::distance)
      .def_property_readonly("graph", &SpGraph::graph)
      .def("edges",
           [](const SpGraph& h) {
             std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
             for (const auto& e : h.edges()) out.emplace_back(e.u, e.w, e.index);
             return out;
           })
      .def("geodesics", [](const SpGraph& h) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& p : h.geodesics()) out.push_back(p.vertices);
        return out;
      });

  m.def("build_spg", &build_spg, py::arg("instance"), py::arg("limit") = kDefaultGeodesicLimit);
  m.def(
      "enumerate_geodesics",
      [](const BaseInstance& inst, std::size_t limit) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& p : enumerate_geodesics(build_dag(inst), limit)) out.push_back(geodesic_names(inst.graph(), p));
        return out;
      },
      py::arg("instance"), py::arg("limit") = kDefaultGeodesicLimit);
  m.def(
      "count_geodesics", [](const BaseInstance& inst) { return to_py(count_geodesics(build_dag(inst))); },
      py::arg("instance"));
  m.def(
      "reduce",
      [](const BaseInstance& inst) {
        ReducedInstance red = reduce(inst);
        py::dict d;
        d["graph"] = red.graph;
        d["source"] = red.source;
        d["target"] = red.target;
        d["collapsed"] = red.collapsed;
        d["vertex_map"] = red.vertex_map;
        return d;
      },
      py::arg("instance"));
  m.def(
      "is_isomorphic", [](const Graph& a, const Graph& b) { return is_isomorphic(a, b).isomorphic; }, py::arg("g1"),
      py::arg("g2"));

  m.def(
      "construct", [](const std::string& name, const std::vector<std::size_t>& params) {
        return family(name, params).instance;
      },
      py::arg("family"), py::arg("params"));
  m.def(
      "check_construction",
      [](const std::string& name, const std::vector<std::size_t>& params) {
        return report_dict(check_construction(family(name, params)));
      },
      py::arg("family"), py::arg("params"));
  m.def(
      "check", [](const std::string& name, const SpGraph& h) { return report_dict(run_spgraph_check(name, h)); },
      py::arg("name"), py::arg("spgraph"));
  m.def(
      "check_decomposition",
      [](const BaseInstance& inst, std::size_t i) { return report_dict(check_decomposition(inst, i)); },
      py::arg("instance"), py::arg("index"));

  m.def(
      "phi",
      [](const std::vector<std::size_t>& dims, const std::string& word) {
        return phi(MoveSequence::parse(GridSpec(dims), word)).coords();
      },
      py::arg("dims"), py::arg("word"));
  m.def(
      "phi_inverse",
      [](const std::vector<std::size_t>& dims, std::vector<long> point) {
        return phi_inverse(LatticePoint(GridSpec(dims), std::move(point))).to_string();
      },
      py::arg("dims"), py::arg("point"));
  m.def(
      "sequence_count", [](const std::vector<std::size_t>& dims) { return to_py(GridSpec(dims).sequence_count()); },
      py::arg("dims"));
  m.def(
      "check_grid_embedding",
      [](const std::vector<std::size_t>& dims) { return report_dict(check_grid_embedding(GridSpec(dims))); },
      py::arg("dims"));
  m.def("staircase", &staircase, py::arg("n1"), py::arg("n2"));
  m.def("cayley", &cayley_adjacent_transpositions, py::arg("m"), py::arg("limit") = kDefaultGeodesicLimit);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "spg");
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
