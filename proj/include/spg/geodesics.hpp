#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spg/graph.hpp"

namespace spg {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultGeodesicLimit = 1'000'000;

// A shortest a,b-path as its vertex positions in the base graph, a first.
// Vertex positions follow natural name order, so comparing geodesics
// compares their name sequences.
struct Geodesic {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  auto operator<=>(const Geodesic&) const = default;
};

std::vector<Vertex> geodesic_names(const Graph& g, const Geodesic& path);

// Directed subgraph of edges lying on some a,b-geodesic.
class GeodesicDag {
 public:
  const BaseInstance& instance() const { return instance_; }
  std::size_t distance() const { return d_; }
  const std::vector<std::size_t>& dist_from_a() const { return from_a_; }
  const std::vector<std::size_t>& dist_to_b() const { return to_b_; }
  // Sorted successor lists; u -> v iff d(a,u) + 1 + d(v,b) = d(a,b).
  const std::vector<std::vector<std::size_t>>& successors() const { return succ_; }
  std::size_t edge_count() const;
  bool on_geodesic(std::size_t v) const;

  // Number of geodesic a->v prefixes and v->b suffixes, per vertex.
  const std::vector<BigInt>& prefix_counts() const { return prefix_; }
  const std::vector<BigInt>& suffix_counts() const { return suffix_; }

 private:
  friend GeodesicDag build_dag(const BaseInstance& inst);
  explicit GeodesicDag(BaseInstance inst) : instance_(std::move(inst)) {}

  BaseInstance instance_;
  std::size_t d_ = 0;
  std::vector<std::size_t> from_a_, to_b_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<BigInt> prefix_, suffix_;
};

// Throws NoGeodesicError when a and b are disconnected.
GeodesicDag build_dag(const BaseInstance& inst);

// All geodesics in lexicographic order. Throws LimitExceededError (carrying
// the exact count) when there are more than `limit`.
std::vector<Geodesic> enumerate_geodesics(const GeodesicDag& dag,
                                          std::size_t limit = kDefaultGeodesicLimit);
BigInt count_geodesics(const GeodesicDag& dag);

// Reduced form: vertices and edges on no geodesic deleted, edges on every
// geodesic contracted. When contraction merges a and b the instance is
// `collapsed` and source == target.
struct ReducedInstance {
  Graph graph;
  Vertex source;
  Vertex target;
  // Original vertex -> reduced vertex, or nullopt if deleted.
  std::map<Vertex, std::optional<Vertex>> vertex_map;
  bool collapsed = false;

  // Throws PreconditionError when collapsed.
  BaseInstance instance() const;
};

ReducedInstance reduce(const BaseInstance& inst);

}  // namespace spg
