#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spg/graph.hpp"
#include "spg/verify.hpp"

namespace spg {

// Connected graphs on exactly n vertices, one per isomorphism class, named
// "0".."n-1". Classes are found by brute-force canonical forms, so n <= 8.
std::vector<Graph> connected_graphs(std::size_t n);

// Every connected graph on 2..max_order vertices with every ordered pair
// (a,b), a != b.
std::vector<BaseInstance> exhaustive_instances(std::size_t max_order);

// G(n,p) instances, n uniform in 4..max_order, p alternating 0.3 / 0.5, a and
// b random distinct; draws with a,b disconnected are discarded.
std::vector<BaseInstance> random_instances(std::size_t count, std::size_t max_order, std::uint64_t seed);

// One connected instance from the same generator (used by the sum corpora).
BaseInstance random_instance(std::size_t order, double p, std::uint64_t seed);

struct TwoSumParts {
  Graph g1, g2;
  Vertex x, y, a, b;
};

std::vector<std::pair<BaseInstance, BaseInstance>> one_sum_corpus(std::size_t count, std::uint64_t seed);
std::vector<std::pair<BaseInstance, BaseInstance>> union_corpus(std::size_t count, std::uint64_t seed);
// Random two-sums with the four cases filled round-robin (count / 4 each,
// remainder to the lower cases).
std::vector<TwoSumParts> two_sum_corpus(std::size_t count, std::uint64_t seed);

struct SummaryRow {
  std::string check;
  std::string slice;
  std::uint64_t examined = 0;
  std::uint64_t failed = 0;
};

struct CorpusRun {
  std::vector<SummaryRow> rows;               // sorted by (check, slice)
  std::vector<std::pair<std::string, CheckReport>> failures;  // (instance description, report)
  bool passed() const { return failures.empty(); }
};

// Runs the named checks over `instances`. Names are those of
// spgraph_check_names() plus "decomp" and "complete".
CorpusRun run_corpus(const std::vector<BaseInstance>& instances, const std::vector<std::string>& checks,
                     const std::string& slice, std::size_t limit = kDefaultGeodesicLimit);

// Text table "check  slice  examined  failed".
std::string format_summary(const CorpusRun& run);

// "a=... b=... edges=u-v,..." for reports.
std::string describe(const BaseInstance& inst);

}  // namespace spg
