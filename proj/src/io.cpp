#include "spg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "spg/error.hpp"

namespace spg {

using nlohmann::json;

namespace {

Vertex vertex_id(const json& v, const std::string& field) {
  if (v.is_string()) {
    auto s = v.get<std::string>();
    if (s.empty()) throw GraphFormatError(field + ": empty vertex id");
    return s;
  }
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw GraphFormatError(field + ": vertex ids must be strings or integers");
}

// Collects vertices and edges, rejecting self-loops and duplicates with the
// caller's location string.
class Builder {
 public:
  void vertex(const Vertex& v) {
    if (seen_.insert(v).second) vertices_.push_back(v);
  }
  void edge(const Vertex& u, const Vertex& v, const std::string& where) {
    if (u == v) throw GraphFormatError(where + ": self-loop at " + u);
    auto key = natural_less(u, v) ? VertexPair{u, v} : VertexPair{v, u};
    if (!edge_set_.insert(key).second) throw GraphFormatError(where + ": duplicate edge " + u + " " + v);
    edges_.push_back(key);
  }
  bool has(const Vertex& v) const { return seen_.count(v) > 0; }
  Graph build() { return Graph::from_edges(std::move(vertices_), edges_); }

 private:
  std::vector<Vertex> vertices_;
  std::set<Vertex> seen_;
  std::vector<VertexPair> edges_;
  std::set<VertexPair> edge_set_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphFormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* const kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                "#66a61e", "#e6ab02", "#a6761d", "#666666"};

}  // namespace

LoadedGraph parse_graph_object(const json& doc) {
  if (!doc.is_object()) throw GraphFormatError("graph JSON must be an object");
  Builder builder;
  const bool explicit_vertices = doc.contains("vertices");
  if (explicit_vertices) {
    const auto& vs = doc.at("vertices");
    if (!vs.is_array()) throw GraphFormatError("vertices: expected an array");
    for (std::size_t k = 0; k < vs.size(); ++k) {
      Vertex v = vertex_id(vs[k], "vertices[" + std::to_string(k) + "]");
      if (builder.has(v)) throw GraphFormatError("vertices[" + std::to_string(k) + "]: duplicate vertex " + v);
      builder.vertex(v);
    }
  }
  if (!doc.contains("edges")) throw GraphFormatError("edges: missing field");
  const auto& es = doc.at("edges");
  if (!es.is_array()) throw GraphFormatError("edges: expected an array");
  for (std::size_t k = 0; k < es.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!es[k].is_array() || es[k].size() != 2) throw GraphFormatError(where + ": expected a pair");
    Vertex u = vertex_id(es[k][0], where), v = vertex_id(es[k][1], where);
    for (const auto& end : {u, v}) {
      if (explicit_vertices && !builder.has(end)) throw GraphFormatError(where + ": unknown vertex " + end);
      builder.vertex(end);
    }
    builder.edge(u, v, where);
  }
  LoadedGraph out{builder.build(), std::nullopt, std::nullopt};
  if (doc.contains("source")) out.source = vertex_id(doc.at("source"), "source");
  if (doc.contains("target")) out.target = vertex_id(doc.at("target"), "target");
  return out;
}

LoadedGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw GraphFormatError(std::string("invalid JSON: ") + e.what());
  }
  return parse_graph_object(doc);
}

LoadedGraph parse_edge_list(std::string_view text) {
  Builder builder;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    const std::string where = "line " + std::to_string(number);
    if (words.empty()) continue;
    if (words.size() > 2) throw GraphFormatError(where + ": expected \"u v\"");
    for (const auto& w : words) builder.vertex(w);
    if (words.size() == 2) builder.edge(words[0], words[1], where);
  }
  return {builder.build(), std::nullopt, std::nullopt};
}

LoadedGraph load_graph_file(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_edge_list(text);
  } catch (const GraphFormatError& e) {
    throw GraphFormatError(path + ": " + e.what());
  }
}

BaseInstance load_instance(const std::string& path, const std::optional<Vertex>& source,
                           const std::optional<Vertex>& target) {
  LoadedGraph loaded = load_graph_file(path);
  auto a = source ? source : loaded.source;
  auto b = target ? target : loaded.target;
  if (!a) throw GraphFormatError("missing source vertex (--a)");
  if (!b) throw GraphFormatError("missing target vertex (--b)");
  return BaseInstance(std::move(loaded.graph), *a, *b);
}

std::vector<BaseInstance> load_instances(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw GraphFormatError(path + ": invalid JSON: " + e.what());
  }
  const json& list = doc.is_object() && doc.contains("instances") ? doc.at("instances") : doc;
  if (!list.is_array()) throw GraphFormatError(path + ": expected an array of instances");
  std::vector<BaseInstance> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = path + ": instances[" + std::to_string(k) + "]";
    LoadedGraph loaded;
    try {
      loaded = parse_graph_object(list[k]);
    } catch (const GraphFormatError& e) {
      throw GraphFormatError(where + ": " + e.what());
    }
    if (!loaded.source || !loaded.target) throw GraphFormatError(where + ": source and target required");
    out.emplace_back(std::move(loaded.graph), *loaded.source, *loaded.target);
  }
  return out;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.named_edges()) edges.push_back({u, v});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

json instance_to_json(const BaseInstance& inst) {
  json doc = graph_to_json(inst.graph());
  doc["source"] = inst.source();
  doc["target"] = inst.target();
  return doc;
}

json geodesics_to_json(const Graph& base, const std::vector<Geodesic>& paths) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(geodesic_names(base, p));
  return out;
}

json spgraph_to_json(const SpGraph& h, const Graph& base) {
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back({{"u", e.u}, {"w", e.w}, {"index", e.index}});
  return {{"distance", h.distance()}, {"geodesics", geodesics_to_json(base, h.geodesics())}, {"edges", std::move(edges)}};
}

json report_to_json(const CheckReport& report) {
  json doc{{"name", report.name}, {"passed", report.passed}, {"stats", report.stats}};
  if (report.witness)
    doc["witness"] = {{"description", report.witness->description}, {"tuples", report.witness->tuples}};
  else
    doc["witness"] = nullptr;
  return doc;
}

json lattice_point_to_json(const LatticePoint& p) {
  return {{"dims", p.spec().dims()}, {"order", "a_ijk by j ascending, then i ascending, then k"}, {"coords", p.coords()}};
}

std::string spgraph_to_dot(const SpGraph& h, const Graph& base) {
  std::ostringstream out;
  out << "graph spg {\n  node [shape=box, fontsize=10];\n";
  for (std::size_t k = 0; k < h.order(); ++k) {
    out << "  " << k << " [label=\"";
    if (k < h.geodesics().size()) out << path_label(geodesic_names(base, h.geodesics()[k]));
    else out << k;
    out << "\"];\n";
  }
  for (const auto& e : h.edges())
    out << "  " << e.u << " -- " << e.w << " [label=\"" << e.index << "\", color=\""
        << kPalette[(e.index - 1) % std::size(kPalette)] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace spg
