#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spg {

using Vertex = std::string;
using VertexPair = std::pair<Vertex, Vertex>;
using IndexPair = std::pair<std::size_t, std::size_t>;

inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

// Natural ordering on identifiers: runs of digits compare numerically, so
// "v2" < "v10" and "(0,9)" < "(0,10)". Total and consistent with equality.
bool natural_less(std::string_view lhs, std::string_view rhs);

// Finite simple undirected graph. Vertices are kept in natural order and
// referred to by position; neighbour lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Throws GraphFormatError on duplicate vertices, self-loops, parallel edges
  // or edges naming a vertex outside `vertices`.
  static Graph from_edges(std::vector<Vertex> vertices,
                          const std::vector<VertexPair>& edges);

  // Vertices named "0", "1", ..., "n-1"; index order equals name order.
  static Graph indexed(std::size_t n, const std::vector<IndexPair>& edges);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return names_.empty(); }

  const std::vector<Vertex>& vertices() const { return names_; }
  const Vertex& name(std::size_t v) const { return names_[v]; }
  std::optional<std::size_t> find(std::string_view id) const;
  // Throws UnknownVertexError.
  std::size_t index_of(std::string_view id) const;

  std::span<const std::size_t> neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<IndexPair> edges() const;
  std::vector<VertexPair> named_edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<Vertex> names_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

// A graph with two distinguished distinct vertices.
class BaseInstance {
 public:
  // Throws UnknownVertexError if a or b is missing, PreconditionError if a == b.
  BaseInstance(Graph graph, Vertex source, Vertex target);

  const Graph& graph() const { return graph_; }
  const Vertex& source() const { return source_; }
  const Vertex& target() const { return target_; }
  std::size_t source_index() const { return a_; }
  std::size_t target_index() const { return b_; }

 private:
  Graph graph_;
  Vertex source_;
  Vertex target_;
  std::size_t a_ = 0;
  std::size_t b_ = 0;
};

// BFS distances from s, indexed by vertex; unreachable vertices get kInfinity.
std::vector<std::size_t> distances(const Graph& g, std::size_t s);
std::vector<std::size_t> distances(const Graph& g, std::string_view s);

// Length of a shortest cycle, kInfinity for forests.
std::size_t girth(const Graph& g);

// Component id per vertex, ids numbered in order of first vertex.
std::vector<std::size_t> connected_components(const Graph& g);
bool is_bipartite(const Graph& g);

// Vertex (u,v) for u in g1, v in g2; adjacent iff equal in one coordinate and
// adjacent in the other.
Graph cartesian_product(const Graph& g1, const Graph& g2);
// Vertices renamed "L:u" and "R:v".
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> keep);
Graph remove_edge(const Graph& g, std::size_t u, std::size_t v);

// Standard families. path_graph(k) has k edges; vertices are "0".."k".
Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph hypercube_graph(std::size_t k);
// Sides "a0".."a{m-1}" and "b0".."b{n-1}".
Graph complete_bipartite(std::size_t m, std::size_t n);

}  // namespace spg
