#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spg/graph.hpp"
#include "spg/spg.hpp"

namespace spg {

// The shortest path graph a construction is expected to produce.
struct Prediction {
  std::string family;                // "path", "complete", "cycle", "empty", "hypercube", "product", ...
  std::vector<std::size_t> params;
  Graph graph;                       // explicit graph of that family
};

struct ConstructionResult {
  BaseInstance instance;
  Prediction predicted;
  // Geodesics (as vertex names) the construction claims are present; only
  // the odd-cycle host fills this.
  std::vector<std::vector<Vertex>> witness_paths;
};

// t internally disjoint a,b-paths of length len >= 3; S = t isolated vertices.
ConstructionResult parallel_paths(std::size_t t, std::size_t len);
// The base graph G_k with S(G_k,a,b) = P_k, k >= 1.
ConstructionResult path_base(std::size_t k);
// K_{2,n} with a,b on the two-vertex side; S = K_n.
ConstructionResult complete_base(std::size_t n);
// 2n+2 vertices a, b, v_i, v_i' (i mod n); S = C_{2n}, n >= 2.
ConstructionResult even_cycle_base(std::size_t n);
// G_{2p+1}, p >= 3, with the 2p+1 geodesics inducing C_{2p+1} in S as the
// witness. Throws Error if the witness paths fail to be geodesics inducing
// a cycle.
ConstructionResult odd_cycle_host_base(std::size_t p);
// J_k: k copies of C_4 chained at antipodal vertices; S = Q_k.
ConstructionResult hypercube_base(std::size_t k);

// Appends a path of k' - d new vertices after b and makes its far end the
// new target. Throws PreconditionError if k' < d(a,b), NoGeodesicError if
// a,b are disconnected.
BaseInstance extend_distance(const BaseInstance& inst, std::size_t new_distance);

// Both sides lengthened to a common distance, then joined by new endpoints
// "a" and "b". Predicted: disjoint union of the two shortest path graphs.
ConstructionResult union_base(const BaseInstance& first, const BaseInstance& second,
                              std::size_t limit = kDefaultGeodesicLimit);

// Glues g1 and g2 whose vertex sets meet exactly in {c}. Throws
// PreconditionError otherwise.
Graph glue_one_sum(const Graph& g1, const Graph& g2, const Vertex& c);

// One-sum of (G1, a, c) and (G2, c', b): c' is identified with c and the
// other vertices of G2 are renamed as needed to keep the overlap at {c}.
// Predicted: S(G1,a,c) x S(G2,c',b).
ConstructionResult one_sum(const BaseInstance& first, const BaseInstance& second,
                           std::size_t limit = kDefaultGeodesicLimit);

// Two-sum along the shared edge xy. Throws PreconditionError unless
// V(g1) and V(g2) meet in exactly {x,y}, both contain xy, a is in g1 and b in
// g2, and neither endpoint is x or y.
BaseInstance two_sum(const Graph& g1, const Graph& g2, const Vertex& x, const Vertex& y,
                     const Vertex& a, const Vertex& b);

enum class TwoSumCase { MatchedUnion = 1, ThroughX = 2, ThroughY = 3, OverlappingUnion = 4 };

struct TwoSumPrediction {
  TwoSumCase which = TwoSumCase::MatchedUnion;
  std::size_t dax = 0, day = 0, dxb = 0, dyb = 0;
  // Predicted S(G,a,b), vertices named by the concatenated geodesic.
  Graph graph;
};

// Case split on d(a,x), d(a,y), d(x,b), d(y,b); the predicted graph is built
// only from S(G1,a,x), S(G1,a,y), S(G2,x,b), S(G2,y,b).
TwoSumPrediction predict_two_sum(const Graph& g1, const Graph& g2, const Vertex& x, const Vertex& y,
                                 const Vertex& a, const Vertex& b,
                                 std::size_t limit = kDefaultGeodesicLimit);

// Geodesic sequence as a single vertex name, e.g. "a-v1-v2-b".
std::string path_label(const std::vector<Vertex>& path);

}  // namespace spg
