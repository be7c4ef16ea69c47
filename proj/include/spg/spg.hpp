#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spg/geodesics.hpp"
#include "spg/graph.hpp"

namespace spg {

// An edge of a shortest path graph with its difference index.
struct SpEdge {
  std::size_t u = 0;
  std::size_t w = 0;
  std::size_t index = 0;

  auto operator<=>(const SpEdge&) const = default;
};

// S(G,a,b): vertex k is geodesic k; an edge joins two geodesics that differ
// at exactly one interior position, and carries that position.
//
// A shortest path graph may also be assembled directly from a labelled graph
// (no geodesics behind it). The theorem checkers accept such inputs so that
// non-realizable negative controls can be fed to them.
class SpGraph {
 public:
  SpGraph() = default;

  // Hand-built labelled graph; `distance` bounds the admissible indices.
  static SpGraph from_labeled(std::size_t order, const std::vector<SpEdge>& edges, std::size_t distance);

  std::size_t order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }
  // d(a,b) of the base instance; 0 for the empty graph.
  std::size_t distance() const { return distance_; }

  const Graph& graph() const { return graph_; }
  const std::vector<Geodesic>& geodesics() const { return geodesics_; }
  const std::vector<Vertex>& base_vertices() const { return base_names_; }
  bool realized() const { return !geodesics_.empty() || graph_.empty(); }

  // Difference index of edge {u,w}, nullopt if not adjacent.
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t w) const;
  // Index labels aligned with graph().neighbors(u).
  const std::vector<std::size_t>& neighbor_indices(std::size_t u) const { return labels_[u]; }
  // All edges with u < w, sorted.
  std::vector<SpEdge> edges() const;

  // Subgraph induced on `keep` (in that order), geodesics carried along.
  SpGraph induced(const std::vector<std::size_t>& keep) const;

 private:
  friend SpGraph build_spg_from_geodesics(const Graph&, std::vector<Geodesic>, std::size_t);

  Graph graph_;
  std::vector<std::vector<std::size_t>> labels_;
  std::vector<Geodesic> geodesics_;
  std::vector<Vertex> base_names_;
  std::size_t distance_ = 0;
};

// Geodesics of one base graph (all the same length, pairwise distinct);
// edges are found by bucketing paths on every masked interior position.
SpGraph build_spg_from_geodesics(const Graph& base, std::vector<Geodesic> geodesics,
                                 std::size_t distance);

// Empty SpGraph when a and b are disconnected; LimitExceededError when there
// are more than `limit` geodesics.
SpGraph build_spg(const BaseInstance& inst, std::size_t limit = kDefaultGeodesicLimit);

// Position where two equal-length geodesics differ, if they differ at
// exactly one interior position. Throws PreconditionError on mismatched
// lengths or endpoints.
std::optional<std::size_t> difference_index(const Geodesic& u, const Geodesic& w);

// E_i. Throws PreconditionError unless 1 <= i <= d-1.
std::vector<SpEdge> edges_at_index(const SpGraph& h, std::size_t i);

struct CrossEdge {
  SpEdge edge;
  std::size_t from = 0;  // component of edge.u
  std::size_t to = 0;    // component of edge.w
};

// Geodesics grouped by their vertex at position i.
struct Decomposition {
  std::size_t index = 0;
  std::vector<std::size_t> middle_vertices;          // base-graph vertices, increasing
  std::vector<std::vector<std::size_t>> components;  // SpGraph vertices per middle vertex
  std::vector<CrossEdge> cross_edges;                // edges joining different components
};

Decomposition decompose_at_index(const SpGraph& h, std::size_t i);

// Induced subgraph of S(inst) on the geodesics through v. Throws
// PreconditionError if v lies on no geodesic.
SpGraph vertex_slice(const BaseInstance& inst, const Vertex& v,
                     std::size_t limit = kDefaultGeodesicLimit);

}  // namespace spg
