#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spg/constructions.hpp"
#include "spg/graph.hpp"
#include "spg/grid.hpp"
#include "spg/induced.hpp"
#include "spg/spg.hpp"

namespace spg {

// Certificate attached to a failed check. Tuples are SpGraph vertex indices
// unless the description says otherwise.
struct Witness {
  std::string description;
  std::vector<std::vector<std::size_t>> tuples;
};

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check) : name(std::move(check)) {}

  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  std::map<std::string, std::uint64_t> stats;

  void fail(std::string description, std::vector<std::vector<std::size_t>> tuples = {});
};

inline constexpr std::size_t kDefaultOddCycleCap = 9;

// Induced P3s never repeat a difference index.
CheckReport check_p3_distinct_indices(const SpGraph& h);
// Induced P3 with indices i, j, |i-j| >= 2, lies on an induced C4.
CheckReport check_p3_c4(const SpGraph& h, SearchLimits limits = {});
CheckReport check_no_induced_c5(const SpGraph& h, SearchLimits limits = {});
// Every induced claw has two of its edges on an induced C4.
CheckReport check_claw_in_c4(const SpGraph& h, SearchLimits limits = {});
// An induced odd cycle of length 5..cap forces an induced C4.
CheckReport check_odd_cycle_c4(const SpGraph& h, std::size_t cap = kDefaultOddCycleCap,
                               SearchLimits limits = {});
// Girth >= 5 implies every nontrivial component is a path or an even cycle
// of length at least 6.
CheckReport check_girth5_classification(const SpGraph& h);

// Groups of H \ E_i against the vertices at distance i, each group against
// S(G,a,v) x S(G,v,b), and the partial matchings between groups.
CheckReport check_decomposition(const BaseInstance& inst, std::size_t i,
                                std::size_t limit = kDefaultGeodesicLimit);
// Runs check_decomposition for every i in 1..d-1 and merges the reports.
CheckReport check_all_decompositions(const BaseInstance& inst, std::size_t limit = kDefaultGeodesicLimit);
// Slice through v against S(G,a,v) x S(G,v,b).
CheckReport check_concatenation(const BaseInstance& inst, const Vertex& v,
                                std::size_t limit = kDefaultGeodesicLimit);
// S complete iff all geodesics vary at one common position; in that case
// the reduced instance is K_{2,n}.
CheckReport check_complete_iff_same_index(const BaseInstance& inst,
                                          std::size_t limit = kDefaultGeodesicLimit);

CheckReport check_one_sum(const BaseInstance& first, const BaseInstance& second,
                          std::size_t limit = kDefaultGeodesicLimit);
CheckReport check_union(const BaseInstance& first, const BaseInstance& second,
                        std::size_t limit = kDefaultGeodesicLimit);
// Also checks that S(G - xy) ≅ S(G) outside the overlapping-union case.
CheckReport check_two_sum(const Graph& g1, const Graph& g2, const Vertex& x, const Vertex& y,
                          const Vertex& a, const Vertex& b, std::size_t limit = kDefaultGeodesicLimit);
// Built instance against its predicted graph (and the witness cycle for the
// odd-cycle host).
CheckReport check_construction(const ConstructionResult& result, std::size_t limit = kDefaultGeodesicLimit);

// Exhaustive over B_{n_1..n_m}: |B| against the multinomial, phi injective
// with image inside the bounds, phi_inverse a left inverse, swap adjacency
// equal to lattice adjacency on the image, and S(grid) carried onto the
// image lattice graph by geodesic -> word -> phi.
CheckReport check_grid_embedding(const GridSpec& spec, std::size_t limit = 10'000'000);
// S(P_{n1} x P_{n2}) against the staircase graph, by phi and by a blind
// isomorphism search.
CheckReport check_staircase(std::size_t n1, std::size_t n2, std::size_t limit = kDefaultGeodesicLimit);
// S(Q_m) against Cay(S_m; adjacent transpositions), and tournament_of as a
// bijection onto the transitive tournaments on m vertices.
CheckReport check_cayley(std::size_t m, std::size_t limit = kDefaultGeodesicLimit);

// Re-derives a failed report's witness from scratch against h; true iff the
// witness really contradicts the claim. Only for the SpGraph-level checks.
bool witness_refutes(const SpGraph& h, const CheckReport& report);

// Checks that take a single SpGraph, by name: "p3-indices", "p3c4", "noc5",
// "claw", "oddcycle", "girth5".
const std::vector<std::string>& spgraph_check_names();
CheckReport run_spgraph_check(const std::string& name, const SpGraph& h);

}  // namespace spg
