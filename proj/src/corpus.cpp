#include "spg/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "spg/error.hpp"

namespace spg {

namespace {

using Adjacency = std::vector<std::uint32_t>;  // bit j of row i: edge ij

std::uint64_t encode(const Adjacency& adj, const std::vector<std::size_t>& order) {
  // Upper triangle of the relabelled matrix, row by row.
  const std::size_t n = order.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
  return code;
}

// Largest code over relabellings that list vertices by non-increasing degree;
// the degree classes are isomorphism invariant, so this is canonical.
std::uint64_t canonical_code(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = static_cast<std::size_t>(__builtin_popcount(adj[v]));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
    return degree[u] != degree[v] ? degree[u] > degree[v] : u < v;
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) of equal degree
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && degree[order[j]] == degree[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  // Odometer over the permutations of every block.
  while (true) {
    best = std::max(best, encode(adj, order));
    std::size_t b = blocks.size();
    while (b-- > 0) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == static_cast<std::size_t>(-1)) break;
  }
  return best;
}

Graph to_graph(const Adjacency& adj) {
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i + 1; j < adj.size(); ++j)
      if ((adj[i] >> j) & 1u) edges.emplace_back(i, j);
  return Graph::indexed(adj.size(), edges);
}

const std::vector<Adjacency>& connected_adjacencies(std::size_t n) {
  static std::map<std::size_t, std::vector<Adjacency>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<Adjacency> out;
  if (n == 1) {
    out.push_back(Adjacency{0});
  } else {
    // Every connected graph has a vertex whose removal keeps it connected.
    std::map<std::uint64_t, Adjacency> classes;
    for (const auto& smaller : connected_adjacencies(n - 1))
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        Adjacency adj = smaller;
        adj.push_back(mask);
        for (std::size_t v = 0; v + 1 < n; ++v)
          if ((mask >> v) & 1u) adj[v] |= 1u << (n - 1);
        classes.emplace(canonical_code(adj), std::move(adj));
      }
    for (auto& [code, adj] : classes) out.push_back(std::move(adj));
  }
  return memo.emplace(n, std::move(out)).first->second;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

Graph random_graph(Rng& rng, const std::vector<Vertex>& names, double p, std::vector<VertexPair> forced = {}) {
  std::set<VertexPair> edges;
  for (const auto& [u, v] : forced) edges.insert(natural_less(u, v) ? VertexPair{u, v} : VertexPair{v, u});
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (rng.chance(p)) {
        const auto& u = names[i];
        const auto& v = names[j];
        edges.insert(natural_less(u, v) ? VertexPair{u, v} : VertexPair{v, u});
      }
  return Graph::from_edges(names, std::vector<VertexPair>(edges.begin(), edges.end()));
}

std::vector<Vertex> numbered(const std::string& prefix, std::size_t n) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

bool reachable(const Graph& g, const Vertex& s, const Vertex& t) { return distances(g, s)[g.index_of(t)] != kInfinity; }

BaseInstance draw_instance(Rng& rng, std::size_t order, double p) {
  auto names = numbered("", order);
  while (true) {
    Graph g = random_graph(rng, names, p);
    std::size_t a = rng.below(order);
    std::size_t b = rng.below(order - 1);
    if (b >= a) ++b;
    Vertex source = g.name(a), target = g.name(b);
    if (reachable(g, source, target)) return BaseInstance(std::move(g), source, target);
  }
}

std::vector<std::pair<BaseInstance, BaseInstance>> instance_pairs(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<BaseInstance, BaseInstance>> out;
  for (std::size_t k = 0; k < count; ++k) {
    BaseInstance first = draw_instance(rng, 3 + rng.below(4), 0.5);
    BaseInstance second = draw_instance(rng, 3 + rng.below(4), 0.5);
    out.emplace_back(std::move(first), std::move(second));
  }
  return out;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n < 1 || n > 8) throw PreconditionError("connected graph generation supports 1..8 vertices");
  std::vector<Graph> out;
  for (const auto& adj : connected_adjacencies(n)) out.push_back(to_graph(adj));
  return out;
}

std::vector<BaseInstance> exhaustive_instances(std::size_t max_order) {
  std::vector<BaseInstance> out;
  for (std::size_t n = 2; n <= max_order; ++n)
    for (const auto& g : connected_graphs(n))
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (a != b) out.emplace_back(g, g.name(a), g.name(b));
  return out;
}

std::vector<BaseInstance> random_instances(std::size_t count, std::size_t max_order, std::uint64_t seed) {
  if (max_order < 2) throw PreconditionError("random instances need at least 2 vertices");
  Rng rng(seed);
  const std::size_t low = std::min<std::size_t>(4, max_order);
  std::vector<BaseInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t n = low + rng.below(max_order - low + 1);
    out.push_back(draw_instance(rng, n, k % 2 == 0 ? 0.3 : 0.5));
  }
  return out;
}

BaseInstance random_instance(std::size_t order, double p, std::uint64_t seed) {
  if (order < 2) throw PreconditionError("random instances need at least 2 vertices");
  Rng rng(seed);
  return draw_instance(rng, order, p);
}

std::vector<std::pair<BaseInstance, BaseInstance>> one_sum_corpus(std::size_t count, std::uint64_t seed) {
  return instance_pairs(count, seed);
}

std::vector<std::pair<BaseInstance, BaseInstance>> union_corpus(std::size_t count, std::uint64_t seed) {
  return instance_pairs(count, seed ^ 0x5bd1e995ULL);
}

std::vector<TwoSumParts> two_sum_corpus(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> quota(4, count / 4);
  for (std::size_t c = 0; c < count % 4; ++c) ++quota[c];
  std::vector<std::vector<TwoSumParts>> by_case(4);
  for (std::size_t attempt = 0; attempt < 1'000'000; ++attempt) {
    bool done = true;
    for (std::size_t c = 0; c < 4; ++c) done = done && by_case[c].size() >= quota[c];
    if (done) break;
    std::vector<Vertex> left{"a", "x", "y"}, right{"x", "y", "b"};
    for (const auto& v : numbered("p", rng.below(4))) left.push_back(v);
    for (const auto& v : numbered("q", rng.below(4))) right.push_back(v);
    TwoSumParts parts{random_graph(rng, left, 0.4, {{"x", "y"}}), random_graph(rng, right, 0.4, {{"x", "y"}}),
                      "x", "y", "a", "b"};
    if (!reachable(parts.g1, "a", "x") || !reachable(parts.g2, "x", "b")) continue;
    auto da = distances(parts.g1, "a");
    auto db = distances(parts.g2, "b");
    std::size_t dax = da[parts.g1.index_of("x")], day = da[parts.g1.index_of("y")];
    std::size_t dxb = db[parts.g2.index_of("x")], dyb = db[parts.g2.index_of("y")];
    std::size_t c;
    if (dax == day && dxb == dyb) c = 0;
    else if ((dax <= day && dxb < dyb) || (dax < day && dxb <= dyb)) c = 1;
    else if ((day <= dax && dyb < dxb) || (day < dax && dyb <= dxb)) c = 2;
    else c = 3;
    if (by_case[c].size() < quota[c]) by_case[c].push_back(std::move(parts));
  }
  std::vector<TwoSumParts> out;
  for (std::size_t round = 0; out.size() < count; ++round) {
    bool any = false;
    for (std::size_t c = 0; c < 4; ++c)
      if (round < by_case[c].size()) {
        out.push_back(by_case[c][round]);
        any = true;
      }
    if (!any) throw Error("two-sum corpus generation could not fill every case");
  }
  return out;
}

std::string describe(const BaseInstance& inst) {
  std::string s = "a=" + inst.source() + " b=" + inst.target() + " edges=";
  bool first = true;
  for (const auto& [u, v] : inst.graph().named_edges()) {
    if (!first) s += ',';
    first = false;
    s += u + "-" + v;
  }
  return s;
}

CorpusRun run_corpus(const std::vector<BaseInstance>& instances, const std::vector<std::string>& checks,
                     const std::string& slice, std::size_t limit) {
  std::map<std::string, SummaryRow> rows;
  for (const auto& name : checks) rows[name] = SummaryRow{name, slice, 0, 0};
  CorpusRun run;
  for (const auto& inst : instances) {
    SpGraph h = build_spg(inst, limit);
    for (const auto& name : checks) {
      CheckReport report;
      if (name == "decomp") {
        if (h.distance() < 2) continue;
        report = check_all_decompositions(inst, limit);
      } else if (name == "complete") {
        report = check_complete_iff_same_index(inst, limit);
      } else {
        report = run_spgraph_check(name, h);
      }
      auto& row = rows[name];
      ++row.examined;
      if (!report.passed) {
        ++row.failed;
        run.failures.emplace_back(describe(inst), std::move(report));
      }
    }
  }
  for (auto& [name, row] : rows) run.rows.push_back(std::move(row));
  return run;
}

std::string format_summary(const CorpusRun& run) {
  std::ostringstream out;
  out << "check        slice                examined  failed\n";
  for (const auto& row : run.rows) {
    std::string check = row.check, slice = row.slice;
    check.resize(std::max<std::size_t>(check.size(), 12), ' ');
    slice.resize(std::max<std::size_t>(slice.size(), 20), ' ');
    out << check << ' ' << slice << ' ' << row.examined << "  " << row.failed << '\n';
  }
  return out.str();
}

}  // namespace spg
