#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spg/graph.hpp"

namespace spg {

enum class PatternKind { P3, Claw, Cycle };

struct Pattern {
  PatternKind kind = PatternKind::Cycle;
  std::size_t length = 0;  // cycle length; unused otherwise

  static Pattern p3() { return {PatternKind::P3, 3}; }
  static Pattern claw() { return {PatternKind::Claw, 4}; }
  static Pattern cycle(std::size_t k) { return {PatternKind::Cycle, k}; }
  static Pattern c4() { return cycle(4); }
  static Pattern c5() { return cycle(5); }

  std::size_t order() const { return kind == PatternKind::P3 ? 3 : kind == PatternKind::Claw ? 4 : length; }
  std::string name() const;
};

struct SearchLimits {
  std::uint64_t max_work = 100'000'000;
};

// One tuple per occurrence, canonical with respect to the pattern's symmetry:
//   P3:    (end, middle, end) with first end < second end
//   claw:  (centre, leaf, leaf, leaf) with leaves increasing
//   cycle: (v0, v1, ..., v{k-1}) with v0 minimal and v1 < v{k-1}
using Occurrence = std::vector<std::size_t>;

// Visits occurrences in increasing lexicographic order of their canonical
// tuples; stops early when `visit` returns false. Throws LimitExceededError
// once more than `max_work` candidate extensions have been examined.
void for_each_induced(const Graph& g, Pattern pattern,
                      const std::function<bool(std::span<const std::size_t>)>& visit,
                      SearchLimits limits = {});

std::vector<Occurrence> find_induced(const Graph& g, Pattern pattern, SearchLimits limits = {});
bool contains_induced(const Graph& g, Pattern pattern, SearchLimits limits = {});

// Re-checks a single tuple against the pattern definition.
bool is_induced_occurrence(const Graph& g, Pattern pattern, std::span<const std::size_t> tuple);

}  // namespace spg
