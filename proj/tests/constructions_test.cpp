#include "spg/constructions.hpp"

#include <algorithm>
#include <map>

#include <gtest/gtest.h>

#include "spg/corpus.hpp"
#include "spg/error.hpp"
#include "spg/isomorphism.hpp"
#include "spg/verify.hpp"

namespace spg {
namespace {

BaseInstance k2n(std::size_t n) { return BaseInstance(complete_bipartite(2, n), "a0", "a1"); }

bool spg_is(const BaseInstance& inst, const Graph& expected) {
  return is_isomorphic(build_spg(inst).graph(), expected).isomorphic;
}

TEST(Families, PathBase) {
  for (std::size_t k = 1; k <= 8; ++k) {
    ConstructionResult r = path_base(k);
    EXPECT_EQ(r.instance.graph().order(), k + 4) << k;
    EXPECT_TRUE(spg_is(r.instance, path_graph(k))) << k;
  }
}

TEST(Families, CompleteAndParallel) {
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_TRUE(spg_is(complete_base(n).instance, complete_graph(n)));
  for (std::size_t t = 1; t <= 4; ++t) {
    ConstructionResult r = parallel_paths(t, 3 + t);
    SpGraph h = build_spg(r.instance);
    EXPECT_EQ(h.order(), t);
    EXPECT_EQ(h.size(), 0u);
  }
  EXPECT_THROW(parallel_paths(2, 2), PreconditionError);
}

TEST(Families, EvenCycle) {
  for (std::size_t n = 2; n <= 7; ++n) {
    ConstructionResult r = even_cycle_base(n);
    EXPECT_EQ(r.instance.graph().order(), 2 * n + 2);
    EXPECT_TRUE(spg_is(r.instance, cycle_graph(2 * n))) << n;
  }
  EXPECT_THROW(even_cycle_base(1), PreconditionError);
}

TEST(Families, HypercubeChain) {
  for (std::size_t k = 1; k <= 5; ++k) {
    ConstructionResult r = hypercube_base(k);
    EXPECT_EQ(r.instance.graph().order(), 3 * k + 1);
    EXPECT_TRUE(spg_is(r.instance, hypercube_graph(k))) << k;
  }
}

TEST(Families, OddCycleHostWitness) {
  for (std::size_t p = 3; p <= 6; ++p) {
    ConstructionResult r = odd_cycle_host_base(p);
    EXPECT_EQ(r.instance.graph().order(), 2 * p + 3);
    EXPECT_EQ(r.witness_paths.size(), 2 * p + 1);
    CheckReport report = check_construction(r);
    EXPECT_TRUE(report.passed) << p;
    // The cycle is odd, so it is also a negative control for bipartiteness.
    EXPECT_FALSE(is_bipartite(build_spg(r.instance).graph()));
  }
  EXPECT_THROW(odd_cycle_host_base(2), PreconditionError);
}

TEST(Families, PredictionsMatchCheckers) {
  std::vector<ConstructionResult> all{path_base(5), complete_base(4), even_cycle_base(4), hypercube_base(3),
                                      parallel_paths(3, 4)};
  for (const auto& r : all) EXPECT_TRUE(check_construction(r).passed) << r.predicted.family;
}

TEST(ExtendDistance, PreservesShortestPathGraph) {
  for (const auto& inst : random_instances(60, 9, 21)) {
    SpGraph h = build_spg(inst);
    for (std::size_t extra = 0; extra <= 3; ++extra) {
      BaseInstance longer = extend_distance(inst, h.distance() + extra);
      SpGraph h2 = build_spg(longer);
      EXPECT_EQ(h2.distance(), h.distance() + extra);
      EXPECT_TRUE(is_isomorphic(h2.graph(), h.graph())) << describe(inst);
    }
  }
  EXPECT_THROW(extend_distance(k2n(3), 1), PreconditionError);
  Graph split = Graph::from_edges({"a", "b"}, {});
  EXPECT_THROW(extend_distance(BaseInstance(split, "a", "b"), 4), NoGeodesicError);
}

TEST(ExtendDistance, AvoidsNameClashes) {
  Graph g = Graph::from_edges({"a", "b", "b~1"}, {{"a", "b"}, {"b", "b~1"}});
  BaseInstance longer = extend_distance(BaseInstance(g, "a", "b"), 3);
  EXPECT_EQ(longer.graph().order(), 5u);
  EXPECT_EQ(build_spg(longer).distance(), 3u);
}

TEST(Union, DisjointUnionOfShortestPathGraphs) {
  ConstructionResult r = union_base(k2n(3), hypercube_base(2).instance);
  SpGraph h = build_spg(r.instance);
  EXPECT_TRUE(is_isomorphic(h.graph(), disjoint_union(complete_graph(3), cycle_graph(4))));
  auto comp = connected_components(h.graph());
  EXPECT_EQ(*std::max_element(comp.begin(), comp.end()), 1u);
  for (const auto& [first, second] : union_corpus(20, 3)) EXPECT_TRUE(check_union(first, second).passed);
}

TEST(OneSum, ProductOfShortestPathGraphs) {
  ConstructionResult r = one_sum(k2n(2), k2n(3));
  EXPECT_EQ(r.predicted.family, "product");
  EXPECT_TRUE(spg_is(r.instance, cartesian_product(complete_graph(2), complete_graph(3))));
  for (const auto& [first, second] : one_sum_corpus(20, 4)) EXPECT_TRUE(check_one_sum(first, second).passed);
}

TEST(OneSum, GlueRequiresSingleSharedVertex) {
  Graph g1 = Graph::from_edges({"a", "c"}, {{"a", "c"}});
  Graph g2 = Graph::from_edges({"c", "b"}, {{"c", "b"}});
  EXPECT_EQ(glue_one_sum(g1, g2, "c").order(), 3u);
  Graph g3 = Graph::from_edges({"a", "c", "b"}, {{"c", "b"}});
  EXPECT_THROW(glue_one_sum(g1, g3, "c"), PreconditionError);
  EXPECT_THROW(glue_one_sum(g1, Graph::from_edges({"q", "b"}, {{"q", "b"}}), "c"), PreconditionError);
}

struct SumFixture {
  Graph g1, g2;
};

// a-x, a-y in G1 and x-b, y-b in G2: both sides tie, matched union.
SumFixture square_sum() {
  return {Graph::from_edges({"a", "x", "y"}, {{"a", "x"}, {"a", "y"}, {"x", "y"}}),
          Graph::from_edges({"x", "y", "b"}, {{"x", "b"}, {"y", "b"}, {"x", "y"}})};
}

TEST(TwoSum, Preconditions) {
  SumFixture f = square_sum();
  EXPECT_NO_THROW(two_sum(f.g1, f.g2, "x", "y", "a", "b"));
  EXPECT_THROW(two_sum(f.g1, f.g2, "x", "x", "a", "b"), PreconditionError);
  EXPECT_THROW(two_sum(f.g1, f.g2, "x", "y", "x", "b"), PreconditionError);
  EXPECT_THROW(two_sum(f.g1, f.g2, "x", "y", "a", "a"), PreconditionError);
  Graph no_edge = Graph::from_edges({"x", "y", "b"}, {{"x", "b"}, {"y", "b"}});
  EXPECT_THROW(two_sum(f.g1, no_edge, "x", "y", "a", "b"), PreconditionError);
  Graph extra = Graph::from_edges({"x", "y", "b", "a"}, {{"x", "b"}, {"y", "b"}, {"x", "y"}});
  EXPECT_THROW(two_sum(f.g1, extra, "x", "y", "a", "b"), PreconditionError);
}

TEST(TwoSum, MatchedUnionExample) {
  SumFixture f = square_sum();
  TwoSumPrediction pred = predict_two_sum(f.g1, f.g2, "x", "y", "a", "b");
  EXPECT_EQ(pred.which, TwoSumCase::MatchedUnion);
  EXPECT_TRUE(is_isomorphic(pred.graph, complete_graph(2)));
  EXPECT_TRUE(spg_is(two_sum(f.g1, f.g2, "x", "y", "a", "b"), pred.graph));
  EXPECT_TRUE(check_two_sum(f.g1, f.g2, "x", "y", "a", "b").passed);
}

TEST(TwoSum, ThroughOneSide) {
  // y is farther from a than x, and ties on the G2 side.
  Graph g1 = Graph::from_edges({"a", "x", "y"}, {{"a", "x"}, {"x", "y"}});
  Graph g2 = Graph::from_edges({"x", "y", "b"}, {{"x", "b"}, {"y", "b"}, {"x", "y"}});
  TwoSumPrediction pred = predict_two_sum(g1, g2, "x", "y", "a", "b");
  EXPECT_EQ(pred.which, TwoSumCase::ThroughX);
  EXPECT_EQ(pred.graph.order(), 1u);
  EXPECT_TRUE(pred.graph.find("a-x-b").has_value());
  TwoSumPrediction mirrored = predict_two_sum(g1, g2, "y", "x", "a", "b");
  EXPECT_EQ(mirrored.which, TwoSumCase::ThroughY);
}

TEST(TwoSum, CorpusCoversAllCases) {
  std::map<TwoSumCase, std::size_t> seen;
  for (const auto& parts : two_sum_corpus(40, 9)) {
    TwoSumPrediction pred = predict_two_sum(parts.g1, parts.g2, parts.x, parts.y, parts.a, parts.b);
    ++seen[pred.which];
    EXPECT_TRUE(check_two_sum(parts.g1, parts.g2, parts.x, parts.y, parts.a, parts.b).passed);
  }
  EXPECT_EQ(seen.size(), 4u);
  for (const auto& [which, n] : seen) EXPECT_EQ(n, 10u);
}

TEST(PathLabel, JoinsWithDashes) {
  EXPECT_EQ(path_label({"a", "v1", "b"}), "a-v1-b");
  EXPECT_EQ(path_label({}), "");
}

}  // namespace
}  // namespace spg
