#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spg/geodesics.hpp"
#include "spg/graph.hpp"

namespace spg {

// Dimensions (n_1, ..., n_m) of the grid P_{n_1} x ... x P_{n_m}.
class GridSpec {
 public:
  // Throws PreconditionError if dims is empty or has a zero entry.
  explicit GridSpec(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dimension() const { return dims_.size(); }  // m
  std::size_t moves() const;                                 // N = sum n_i
  std::size_t lattice_dimension() const;                     // M = sum (i-1) n_i
  // |B_{n_1..n_m}| = N! / (n_1! ... n_m!)
  BigInt sequence_count() const;

  bool operator==(const GridSpec&) const = default;

 private:
  std::vector<std::size_t> dims_;
};

// M for an arbitrary ordering of the dimensions.
std::size_t lattice_dimension(const std::vector<std::size_t>& dims);

// A word in B_{n_1..n_m}: symbol i (1-based) occurs exactly n_i times.
class MoveSequence {
 public:
  // Throws PreconditionError on out-of-range symbols or wrong multiplicities.
  MoveSequence(GridSpec spec, std::vector<std::size_t> symbols);
  // Digit string for m <= 9 ("32121231"), otherwise comma separated.
  static MoveSequence parse(const GridSpec& spec, const std::string& text);

  const GridSpec& spec() const { return spec_; }
  const std::vector<std::size_t>& symbols() const { return symbols_; }
  std::string to_string() const;

  bool operator==(const MoveSequence&) const = default;
  bool operator<(const MoveSequence& other) const { return symbols_ < other.symbols_; }

 private:
  GridSpec spec_;
  std::vector<std::size_t> symbols_;
};

// Coordinates (a_{ijk}) ordered by j = 2..m, then i = 1..j-1, then k = 1..n_j.
class LatticePoint {
 public:
  // Throws PreconditionError if the length differs from M.
  LatticePoint(GridSpec spec, std::vector<long> coords);

  const GridSpec& spec() const { return spec_; }
  const std::vector<long>& coords() const { return coords_; }
  std::string to_string() const;  // "(3,2,1,3,1,3,0)"

  // Position of a_{ijk} in coords() (1-based i, j, k).
  static std::size_t offset(const GridSpec& spec, std::size_t i, std::size_t j, std::size_t k);

  bool operator==(const LatticePoint&) const = default;

 private:
  GridSpec spec_;
  std::vector<long> coords_;
};

// Grid with vertices "(x_1,...,x_m)", a = origin, b = (n_1,...,n_m).
BaseInstance grid_base(const GridSpec& spec);

// Coordinates of a grid_base vertex name. Throws PreconditionError.
std::vector<std::size_t> grid_vertex_coordinates(const Vertex& name);

// Geodesic (vertex names of grid_base) <-> move word. Throws PreconditionError
// if the path is not an origin-to-corner geodesic of the grid.
MoveSequence encode_path(const GridSpec& spec, const std::vector<Vertex>& path);
std::vector<Vertex> decode_path(const MoveSequence& word);

// B_{n_1..n_m} in lexicographic order; LimitExceededError above `limit`.
std::vector<MoveSequence> enumerate_sequences(const GridSpec& spec,
                                              std::size_t limit = kDefaultGeodesicLimit);
// Adjacent iff one is obtained from the other by swapping two different
// consecutive symbols.
bool sequences_adjacent(const MoveSequence& u, const MoveSequence& w);

LatticePoint phi(const MoveSequence& word);
// Unique preimage; PreconditionError if the point is not in the image.
MoveSequence phi_inverse(const LatticePoint& point);
// Image constraints: 0 <= a_{ijk} <= n_i and a_{ijk} >= a_{ij(k+1)}.
bool satisfies_image_bounds(const LatticePoint& point);
// Differ by exactly 1 in exactly one coordinate.
bool lattice_adjacent(const LatticePoint& p, const LatticePoint& q);

// Induced subgraph of Z^{n2} on n1 >= a_1 >= ... >= a_{n2} >= 0.
Graph staircase(std::size_t n1, std::size_t n2);

// Cay(S_m; adjacent transpositions); vertices are permutation words.
Graph cayley_adjacent_transpositions(std::size_t m, std::size_t limit = kDefaultGeodesicLimit);

// Complete orientation on {1..m}: reversed(i,j) == true means j -> i.
class TransitiveTournament {
 public:
  // Throws PreconditionError if the orientation has a directed 3-cycle.
  TransitiveTournament(std::size_t m, std::vector<bool> reversed);

  std::size_t size() const { return m_; }
  // True iff the edge between i < j (1-based) is oriented i -> j.
  bool forward(std::size_t i, std::size_t j) const;
  const std::vector<bool>& bits() const { return reversed_; }

  bool operator==(const TransitiveTournament&) const = default;
  bool operator<(const TransitiveTournament& o) const { return reversed_ < o.reversed_; }

 private:
  std::size_t m_;
  std::vector<bool> reversed_;  // pairs (i,j), i<j, in the same order as phi
};

// Requires every n_i = 1. Bits are read off phi.
TransitiveTournament tournament_of(const MoveSequence& word);

}  // namespace spg
