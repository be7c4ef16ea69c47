#include <algorithm>
#include <set>
#include <unordered_map>

#include "spg/error.hpp"
#include "spg/isomorphism.hpp"
#include "spg/verify.hpp"

namespace spg {

namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw LimitExceededError("grid too large for packed keys", "");
  return out;
}

// Word as a base-m integer, position t weighted by m^t.
struct WordKeys {
  std::vector<std::uint64_t> power;
  WordKeys(std::size_t m, std::size_t length) : power(length + 1, 1) {
    for (std::size_t t = 1; t <= length; ++t) power[t] = checked_mul(power[t - 1], m);
  }
  std::uint64_t operator()(const std::vector<std::size_t>& s) const {
    std::uint64_t key = 0;
    for (std::size_t t = 0; t < s.size(); ++t) key += (s[t] - 1) * power[t];
    return key;
  }
};

}  // namespace

CheckReport check_grid_embedding(const GridSpec& spec, std::size_t limit) {
  CheckReport r("grid");
  const auto& n = spec.dims();
  const std::size_t m = spec.dimension();
  const std::size_t lattice = spec.lattice_dimension();
  std::vector<MoveSequence> words = enumerate_sequences(spec, limit);
  r.stats["words"] = words.size();
  r.stats["lattice_dimension"] = lattice;
  if (BigInt(words.size()) != spec.sequence_count()) {
    r.fail("enumeration size differs from the multinomial");
    return r;
  }

  // Mixed-radix packing of lattice points; coordinate a_ijk ranges over 0..n_i.
  std::vector<std::size_t> bound(lattice);
  for (std::size_t j = 2; j <= m; ++j)
    for (std::size_t i = 1; i < j; ++i)
      for (std::size_t k = 1; k <= n[j - 1]; ++k) bound[LatticePoint::offset(spec, i, j, k)] = n[i - 1];
  std::vector<std::uint64_t> weight(lattice, 1);
  for (std::size_t c = 1; c < lattice; ++c) weight[c] = checked_mul(weight[c - 1], bound[c - 1] + 1);
  if (lattice > 0) (void)checked_mul(weight[lattice - 1], bound[lattice - 1] + 1);

  const WordKeys word_key(m, spec.moves());
  std::unordered_map<std::uint64_t, std::uint32_t> by_point, by_word;
  by_point.reserve(words.size());
  by_word.reserve(words.size());
  std::vector<std::uint64_t> point_key(words.size());
  std::vector<std::uint8_t> coords(words.size() * lattice);
  for (std::size_t k = 0; k < words.size(); ++k) {
    LatticePoint p = phi(words[k]);
    if (!satisfies_image_bounds(p)) {
      r.fail("phi(" + words[k].to_string() + ") = " + p.to_string() + " violates the bounds", {{k}});
      return r;
    }
    std::uint64_t key = 0;
    for (std::size_t c = 0; c < lattice; ++c) {
      key += static_cast<std::uint64_t>(p.coords()[c]) * weight[c];
      coords[k * lattice + c] = static_cast<std::uint8_t>(p.coords()[c]);
    }
    point_key[k] = key;
    auto [it, fresh] = by_point.emplace(key, static_cast<std::uint32_t>(k));
    if (!fresh) {
      r.fail("phi is not injective", {{it->second, k}});
      return r;
    }
    if (!(phi_inverse(p) == words[k])) {
      r.fail("phi_inverse does not recover " + words[k].to_string(), {{k}});
      return r;
    }
    by_word.emplace(word_key(words[k].symbols()), static_cast<std::uint32_t>(k));
  }

  // S(grid) vertex -> word index via the move directions of each geodesic.
  BaseInstance inst = grid_base(spec);
  SpGraph h = build_spg(inst, limit);
  if (h.order() != words.size()) {
    r.fail("S(grid) has " + std::to_string(h.order()) + " vertices, expected " + std::to_string(words.size()));
    return r;
  }
  std::vector<std::vector<std::size_t>> position(inst.graph().order());
  for (std::size_t v = 0; v < position.size(); ++v) position[v] = grid_vertex_coordinates(inst.graph().name(v));
  std::vector<std::uint32_t> to_word(h.order());
  std::vector<std::uint32_t> to_spg(words.size(), static_cast<std::uint32_t>(-1));
  std::vector<std::size_t> symbols(spec.moves());
  for (std::size_t u = 0; u < h.order(); ++u) {
    const auto& path = h.geodesics()[u].vertices;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      const auto& from = position[path[t]];
      const auto& to = position[path[t + 1]];
      for (std::size_t d = 0; d < m; ++d)
        if (to[d] != from[d]) symbols[t] = d + 1;
    }
    auto it = by_word.find(word_key(symbols));
    if (it == by_word.end() || to_spg[it->second] != static_cast<std::uint32_t>(-1)) {
      r.fail("geodesic does not correspond to a distinct word", {{u}});
      return r;
    }
    to_word[u] = it->second;
    to_spg[it->second] = static_cast<std::uint32_t>(u);
  }

  std::uint64_t edges = 0;
  std::vector<std::uint32_t> swaps, lattice_nb, spg_nb;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& s = words[k].symbols();
    const std::uint64_t wk = word_key(s);
    swaps.clear();
    for (std::size_t t = 0; t + 1 < s.size(); ++t) {
      if (s[t] == s[t + 1]) continue;
      std::uint64_t other = wk - (s[t] - 1) * word_key.power[t] - (s[t + 1] - 1) * word_key.power[t + 1] +
                            (s[t + 1] - 1) * word_key.power[t] + (s[t] - 1) * word_key.power[t + 1];
      swaps.push_back(by_word.at(other));
    }
    lattice_nb.clear();
    for (std::size_t c = 0; c < lattice; ++c) {
      const std::size_t value = coords[k * lattice + c];
      if (value < bound[c])
        if (auto it = by_point.find(point_key[k] + weight[c]); it != by_point.end()) lattice_nb.push_back(it->second);
      if (value > 0)
        if (auto it = by_point.find(point_key[k] - weight[c]); it != by_point.end()) lattice_nb.push_back(it->second);
    }
    spg_nb.clear();
    for (std::size_t w : h.graph().neighbors(to_spg[k])) spg_nb.push_back(to_word[w]);
    std::sort(swaps.begin(), swaps.end());
    std::sort(lattice_nb.begin(), lattice_nb.end());
    std::sort(spg_nb.begin(), spg_nb.end());
    if (swaps != lattice_nb) {
      r.fail("swap neighbours of " + words[k].to_string() + " differ from lattice neighbours of its image", {{k}});
      return r;
    }
    if (spg_nb != swaps) {
      r.fail("S(grid) neighbours of " + words[k].to_string() + " differ from its swap neighbours", {{k}});
      return r;
    }
    edges += swaps.size();
  }
  r.stats["edges"] = edges / 2;
  return r;
}

CheckReport check_staircase(std::size_t n1, std::size_t n2, std::size_t limit) {
  CheckReport r("staircase");
  GridSpec spec({n1, n2});
  BaseInstance inst = grid_base(spec);
  SpGraph h = build_spg(inst, limit);
  Graph stairs = staircase(n1, n2);
  r.stats["order"] = stairs.order();
  if (h.order() != stairs.order()) {
    r.fail("vertex counts differ");
    return r;
  }
  std::vector<std::size_t> mapping(h.order());
  for (std::size_t u = 0; u < h.order(); ++u) {
    LatticePoint p = phi(encode_path(spec, geodesic_names(inst.graph(), h.geodesics()[u])));
    auto at = stairs.find(p.to_string());
    if (!at) {
      r.fail("phi image " + p.to_string() + " is not a staircase vertex", {{u}});
      return r;
    }
    mapping[u] = *at;
  }
  if (!is_isomorphism(h.graph(), stairs, mapping)) r.fail("phi is not an isomorphism onto the staircase graph");
  else if (!is_isomorphic(h.graph(), stairs)) r.fail("isomorphism search disagrees with phi");
  return r;
}

CheckReport check_cayley(std::size_t m, std::size_t limit) {
  CheckReport r("cayley");
  GridSpec spec(std::vector<std::size_t>(m, 1));
  BaseInstance inst = grid_base(spec);
  SpGraph h = build_spg(inst, limit);
  Graph cay = cayley_adjacent_transpositions(m, limit);
  r.stats["order"] = cay.order();
  if (h.order() != cay.order()) {
    r.fail("vertex counts differ");
    return r;
  }
  std::vector<std::size_t> mapping(h.order());
  std::set<std::vector<bool>> image;
  for (std::size_t u = 0; u < h.order(); ++u) {
    MoveSequence word = encode_path(spec, geodesic_names(inst.graph(), h.geodesics()[u]));
    mapping[u] = cay.index_of(word.to_string());
    image.insert(tournament_of(word).bits());
  }
  if (!is_isomorphism(h.graph(), cay, mapping)) {
    r.fail("reading geodesics as permutations is not an isomorphism onto the Cayley graph");
    return r;
  }
  if (!is_isomorphic(h.graph(), cay)) {
    r.fail("isomorphism search disagrees with the permutation reading");
    return r;
  }
  // All orientations of K_m, keep those without a directed 3-cycle.
  const std::size_t pairs = m * (m - 1) / 2;
  std::set<std::vector<bool>> transitive;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<bool> bits(pairs);
    for (std::size_t b = 0; b < pairs; ++b) bits[b] = (mask >> b) & 1u;
    try {
      transitive.insert(TransitiveTournament(m, bits).bits());
    } catch (const PreconditionError&) {
    }
  }
  r.stats["tournaments"] = image.size();
  r.stats["transitive_orientations"] = transitive.size();
  if (image.size() != h.order()) r.fail("distinct permutations share a tournament");
  else if (image != transitive) r.fail("tournament image differs from the transitive orientations");
  return r;
}

}  // namespace spg
