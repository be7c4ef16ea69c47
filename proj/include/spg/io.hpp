#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spg/graph.hpp"
#include "spg/grid.hpp"
#include "spg/spg.hpp"
#include "spg/verify.hpp"

namespace spg {

// A parsed graph plus the endpoints named in the file, if any.
struct LoadedGraph {
  Graph graph;
  std::optional<Vertex> source;
  std::optional<Vertex> target;
};

// {"vertices":[...], "edges":[[u,v],...], "source":a, "target":b}. Integer
// ids are read as their decimal strings; "vertices" may be omitted.
// Throws GraphFormatError naming the offending field.
LoadedGraph parse_graph_json(std::string_view text);
LoadedGraph parse_graph_object(const nlohmann::json& doc);
// One "u v" pair per line, a lone token declares an isolated vertex, '#'
// starts a comment. Throws GraphFormatError naming the line.
LoadedGraph parse_edge_list(std::string_view text);
// JSON if the first non-blank character is '{', edge list otherwise.
LoadedGraph load_graph_file(const std::string& path);

// Flags win over endpoints stored in the file. Throws GraphFormatError if an
// endpoint is missing, UnknownVertexError / PreconditionError as BaseInstance.
BaseInstance load_instance(const std::string& path, const std::optional<Vertex>& source,
                           const std::optional<Vertex>& target);
// A JSON array of graph objects (each with source/target), or an object
// with an "instances" array.
std::vector<BaseInstance> load_instances(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json instance_to_json(const BaseInstance& inst);
// {"geodesics":[[names...],...], "edges":[{"u":i,"w":j,"index":k},...]}
nlohmann::json spgraph_to_json(const SpGraph& h, const Graph& base);
nlohmann::json geodesics_to_json(const Graph& base, const std::vector<Geodesic>& paths);
nlohmann::json report_to_json(const CheckReport& report);
// {"dims":[...], "order":"pairs (i,j) by j then i, then k", "coords":[...]}
nlohmann::json lattice_point_to_json(const LatticePoint& p);

// Undirected DOT; edges labelled with their difference index and coloured by
// it from a cyclic palette.
std::string spgraph_to_dot(const SpGraph& h, const Graph& base);

}  // namespace spg
