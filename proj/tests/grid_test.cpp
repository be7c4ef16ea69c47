#include "spg/grid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spg/constructions.hpp"
#include "spg/error.hpp"
#include "spg/isomorphism.hpp"
#include "spg/spg.hpp"
#include "spg/verify.hpp"

namespace spg {
namespace {

MoveSequence word(const std::vector<std::size_t>& dims, const std::string& text) {
  return MoveSequence::parse(GridSpec(dims), text);
}

// Dimension tuples (n_1..n_m), each n_i >= 1, with sum at most `max_moves`.
std::vector<std::vector<std::size_t>> dims_up_to(std::size_t max_moves) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t n = 1; n <= left; ++n) {
      cur.push_back(n);
      self(self, left - n);
      cur.pop_back();
    }
  };
  rec(rec, max_moves);
  return out;
}

// Direct evaluation of the coordinate definition, one pass per coordinate.
std::vector<long> phi_by_definition(const GridSpec& spec, const std::vector<std::size_t>& s) {
  std::vector<long> out;
  for (std::size_t j = 2; j <= spec.dimension(); ++j)
    for (std::size_t i = 1; i < j; ++i)
      for (std::size_t k = 1; k <= spec.dims()[j - 1]; ++k) {
        std::size_t seen = 0, pos = 0;
        for (; pos < s.size(); ++pos)
          if (s[pos] == j && ++seen == k) break;
        long count = 0;
        for (std::size_t t = pos + 1; t < s.size(); ++t) count += s[t] == i;
        out.push_back(count);
      }
  return out;
}

TEST(GridSpecTest, Basics) {
  GridSpec spec({3, 3, 2});
  EXPECT_EQ(spec.moves(), 8u);
  EXPECT_EQ(spec.lattice_dimension(), 7u);
  EXPECT_EQ(spec.sequence_count(), 560);
  EXPECT_THROW(GridSpec({}), PreconditionError);
  EXPECT_THROW(GridSpec({2, 0}), PreconditionError);
}

TEST(GridSpecTest, LatticeDimensionMinimisedByDecreasingOrder) {
  for (const auto& dims : dims_up_to(8)) {
    std::vector<std::size_t> sorted = dims;
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<std::size_t> perm = dims;
    std::sort(perm.begin(), perm.end());
    std::size_t best = lattice_dimension(perm);
    do best = std::min(best, lattice_dimension(perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(lattice_dimension(sorted), best);
  }
}

TEST(MoveSequenceTest, ParseAndValidate) {
  MoveSequence s = word({3, 3, 2}, "32121231");
  EXPECT_EQ(s.to_string(), "32121231");
  EXPECT_THROW(word({3, 3, 2}, "3212123"), PreconditionError);
  EXPECT_THROW(word({1, 1}, "13"), PreconditionError);
  EXPECT_THROW(word({1, 1}, "1x"), PreconditionError);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(word({3, 3, 2}, "32121231")).coords(), (std::vector<long>{3, 2, 1, 3, 1, 3, 0}));
  EXPECT_EQ(phi(word({3, 3, 2}, "32121231")).to_string(), "(3,2,1,3,1,3,0)");
  EXPECT_EQ(phi(word({2, 2}, "2211")).coords(), (std::vector<long>{2, 2}));
  EXPECT_EQ(phi(word({2, 2}, "1122")).coords(), (std::vector<long>{0, 0}));
  EXPECT_EQ(phi(word({1}, "1")).coords(), std::vector<long>{});
}

TEST(Phi, OffsetsFollowCoordinateOrder) {
  GridSpec spec({3, 3, 2});
  EXPECT_EQ(LatticePoint::offset(spec, 1, 2, 1), 0u);
  EXPECT_EQ(LatticePoint::offset(spec, 1, 2, 3), 2u);
  EXPECT_EQ(LatticePoint::offset(spec, 1, 3, 1), 3u);
  EXPECT_EQ(LatticePoint::offset(spec, 2, 3, 2), 6u);
}

TEST(Phi, MatchesDefinitionAndRoundTrips) {
  for (const auto& dims : dims_up_to(7)) {
    GridSpec spec(dims);
    std::set<std::vector<long>> image;
    auto words = enumerate_sequences(spec);
    EXPECT_EQ(BigInt(words.size()), oracle::multinomial(dims));
    for (const auto& w : words) {
      LatticePoint p = phi(w);
      ASSERT_EQ(p.coords(), phi_by_definition(spec, w.symbols()));
      EXPECT_TRUE(satisfies_image_bounds(p));
      EXPECT_EQ(phi_inverse(p), w);
      image.insert(p.coords());
    }
    EXPECT_EQ(image.size(), words.size());
  }
}

TEST(Phi, RoundTripOnTwoTwoOne) {
  GridSpec spec({2, 2, 1});
  auto words = enumerate_sequences(spec);
  EXPECT_EQ(words.size(), 30u);
  for (const auto& w : words) EXPECT_EQ(phi_inverse(phi(w)), w);
}

TEST(PhiInverse, RejectsPointsOutsideImage) {
  GridSpec spec({2, 2});
  EXPECT_THROW(phi_inverse(LatticePoint(spec, {0, 1})), PreconditionError);
  EXPECT_THROW(phi_inverse(LatticePoint(spec, {3, 0})), PreconditionError);
  EXPECT_THROW(LatticePoint(spec, {1}), PreconditionError);
  EXPECT_FALSE(satisfies_image_bounds(LatticePoint(spec, {0, 1})));
}

TEST(Adjacency, SwapsAreUnitSteps) {
  for (const auto& dims : dims_up_to(6)) {
    auto words = enumerate_sequences(GridSpec(dims));
    std::vector<LatticePoint> points;
    for (const auto& w : words) points.push_back(phi(w));
    for (std::size_t u = 0; u < words.size(); ++u)
      for (std::size_t w = u + 1; w < words.size(); ++w)
        ASSERT_EQ(sequences_adjacent(words[u], words[w]), lattice_adjacent(points[u], points[w]))
            << words[u].to_string() << " " << words[w].to_string();
  }
}

TEST(Adjacency, WordsMatchShortestPathGraph) {
  GridSpec spec({2, 2, 1});
  BaseInstance grid = grid_base(spec);
  SpGraph h = build_spg(grid);
  std::vector<MoveSequence> words;
  for (const auto& g : h.geodesics()) words.push_back(encode_path(spec, geodesic_names(grid.graph(), g)));
  for (std::size_t k = 0; k < words.size(); ++k) EXPECT_EQ(decode_path(words[k]), geodesic_names(grid.graph(), h.geodesics()[k]));
  for (std::size_t u = 0; u < h.order(); ++u)
    for (std::size_t w = u + 1; w < h.order(); ++w)
      EXPECT_EQ(h.edge_index(u, w).has_value(), sequences_adjacent(words[u], words[w]));
}

TEST(Adjacency, EncodeRejectsNonGeodesics) {
  GridSpec spec({1, 1});
  EXPECT_THROW(encode_path(spec, {"(0,0)", "(1,1)"}), PreconditionError);
  EXPECT_THROW(encode_path(spec, {"(0,0)", "(1,0)", "(0,0)"}), PreconditionError);
  EXPECT_EQ(encode_path(spec, {"(0,0)", "(0,1)", "(1,1)"}).to_string(), "21");
}

TEST(Enumerate, LexicographicAndLimited) {
  auto words = enumerate_sequences(GridSpec({2, 1}));
  std::vector<std::string> text;
  for (const auto& w : words) text.push_back(w.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"112", "121", "211"}));
  EXPECT_THROW(enumerate_sequences(GridSpec({6, 6, 6}), 1000), LimitExceededError);
}

TEST(GridEmbedding, CheckerPasses) {
  for (const auto& dims : dims_up_to(6)) EXPECT_TRUE(check_grid_embedding(GridSpec(dims)).passed);
}

TEST(Staircase, SizesAreBinomial) {
  for (std::size_t n1 = 1; n1 <= 4; ++n1)
    for (std::size_t n2 = 1; n2 <= 4; ++n2) {
      Graph s = staircase(n1, n2);
      EXPECT_EQ(BigInt(s.order()), oracle::binomial(n1 + n2, n1));
      EXPECT_TRUE(is_isomorphic(s, build_spg(grid_base(GridSpec({n1, n2}))).graph()));
    }
  EXPECT_TRUE(is_isomorphic(staircase(1, 1), path_graph(1)));
  EXPECT_TRUE(is_isomorphic(staircase(2, 1), path_graph(2)));
  EXPECT_TRUE(check_staircase(3, 3).passed);
}

TEST(Cayley, SmallCases) {
  EXPECT_TRUE(is_isomorphic(cayley_adjacent_transpositions(2), complete_graph(2)));
  EXPECT_TRUE(is_isomorphic(cayley_adjacent_transpositions(3), cycle_graph(6)));
  Graph c4 = cayley_adjacent_transpositions(4);
  EXPECT_EQ(c4.order(), 24u);
  EXPECT_EQ(c4.size(), 36u);
  EXPECT_THROW(cayley_adjacent_transpositions(7, 100), LimitExceededError);
  EXPECT_TRUE(check_cayley(4).passed);
}

TEST(Tournaments, AllTransitiveOrientationsAreHit) {
  for (std::size_t m = 2; m <= 5; ++m) {
    std::vector<std::size_t> ones(m, 1);
    std::set<TransitiveTournament> seen;
    for (const auto& w : enumerate_sequences(GridSpec(ones))) {
      TransitiveTournament t = tournament_of(w);
      // i -> j exactly when i is used before j.
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
          auto pos = [&](std::size_t s) {
            return std::find(w.symbols().begin(), w.symbols().end(), s) - w.symbols().begin();
          };
          EXPECT_EQ(t.forward(i, j), pos(i) < pos(j)) << w.to_string();
        }
      seen.insert(t);
    }
    EXPECT_EQ(BigInt(seen.size()), oracle::factorial(m));
  }
  EXPECT_THROW(TransitiveTournament(3, {false, true, false}), PreconditionError);
  EXPECT_THROW(tournament_of(word({2, 1}, "121")), PreconditionError);
}

}  // namespace
}  // namespace spg
