#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spg/graph.hpp"

namespace spg {

struct IsoOptions {
  // Inputs above this order raise LimitExceededError.
  std::size_t max_vertices = 200;
};

struct IsoResult {
  bool isomorphic = false;
  // mapping[v] is the image in g2 of vertex v of g1 (empty unless isomorphic).
  std::vector<std::size_t> mapping;

  explicit operator bool() const { return isomorphic; }
};

// Colour-refinement guided backtracking. Optional vertex colours must be
// preserved by the bijection (used to pin endpoints and similar markers).
IsoResult is_isomorphic(const Graph& g1, const Graph& g2, IsoOptions options = {});
IsoResult is_isomorphic(const Graph& g1, const Graph& g2, std::span<const std::size_t> colors1,
                        std::span<const std::size_t> colors2, IsoOptions options = {});

// True iff `mapping` is a bijection V(g1) -> V(g2) sending edges to edges and
// non-edges to non-edges.
bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const std::size_t> mapping);

}  // namespace spg
