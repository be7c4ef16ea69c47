#include "spg/geodesics.hpp"

#include <algorithm>
#include <numeric>

#include "spg/error.hpp"

namespace spg {

std::vector<Vertex> geodesic_names(const Graph& g, const Geodesic& path) {
  std::vector<Vertex> out;
  out.reserve(path.vertices.size());
  for (std::size_t v : path.vertices) out.push_back(g.name(v));
  return out;
}

std::size_t GeodesicDag::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ_) n += s.size();
  return n;
}

bool GeodesicDag::on_geodesic(std::size_t v) const {
  return from_a_[v] != kInfinity && to_b_[v] != kInfinity && from_a_[v] + to_b_[v] == d_;
}

GeodesicDag build_dag(const BaseInstance& inst) {
  GeodesicDag dag(inst);
  const Graph& g = inst.graph();
  const std::size_t a = inst.source_index(), b = inst.target_index();
  dag.from_a_ = distances(g, a);
  if (dag.from_a_[b] == kInfinity)
    throw NoGeodesicError("no geodesic: " + inst.source() + " and " + inst.target() +
                          " are disconnected");
  dag.to_b_ = distances(g, b);
  dag.d_ = dag.from_a_[b];
  dag.succ_.assign(g.order(), {});
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (!dag.on_geodesic(u)) continue;
    for (std::size_t v : g.neighbors(u))
      if (dag.to_b_[v] != kInfinity && dag.from_a_[u] + 1 + dag.to_b_[v] == dag.d_)
        dag.succ_[u].push_back(v);
  }

  // Layered DP in both directions.
  std::vector<std::size_t> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return dag.from_a_[x] < dag.from_a_[y]; });
  dag.prefix_.assign(g.order(), 0);
  dag.suffix_.assign(g.order(), 0);
  dag.prefix_[a] = 1;
  for (std::size_t u : order)
    for (std::size_t v : dag.succ_[u]) dag.prefix_[v] += dag.prefix_[u];
  dag.suffix_[b] = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t v : dag.succ_[*it]) dag.suffix_[*it] += dag.suffix_[v];
  return dag;
}

BigInt count_geodesics(const GeodesicDag& dag) {
  return dag.prefix_counts()[dag.instance().target_index()];
}

std::vector<Geodesic> enumerate_geodesics(const GeodesicDag& dag, std::size_t limit) {
  BigInt total = count_geodesics(dag);
  if (total > limit)
    throw LimitExceededError("geodesic count " + total.str() + " exceeds limit " + std::to_string(limit),
                             total.str());
  std::vector<Geodesic> out;
  out.reserve(static_cast<std::size_t>(total));
  const auto& succ = dag.successors();
  const std::size_t b = dag.instance().target_index();
  std::vector<std::size_t> path{dag.instance().source_index()};
  std::vector<std::size_t> cursor{0};
  // Iterative DFS over sorted successors yields lexicographic order.
  while (!path.empty()) {
    std::size_t u = path.back();
    if (u == b) {
      out.push_back({path});
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    std::size_t& next = cursor.back();
    if (next < succ[u].size()) {
      path.push_back(succ[u][next++]);
      cursor.push_back(0);
    } else {
      path.pop_back();
      cursor.pop_back();
    }
  }
  return out;
}

BaseInstance ReducedInstance::instance() const {
  if (collapsed) throw PreconditionError("collapsed reduction has a single endpoint");
  return BaseInstance(graph, source, target);
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

ReducedInstance reduce(const BaseInstance& inst) {
  const GeodesicDag dag = build_dag(inst);
  const Graph& g = inst.graph();
  const BigInt total = count_geodesics(dag);
  const std::size_t a = inst.source_index(), b = inst.target_index();
  const auto& dist = dag.dist_from_a();

  DisjointSets sets(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v : dag.successors()[u])
      if (dag.prefix_counts()[u] * dag.suffix_counts()[v] == total) sets.unite(u, v);

  // Representative name: an endpoint if the class holds one, otherwise the
  // member nearest a (natural order breaks ties).
  std::vector<std::size_t> rep(g.order(), kInfinity);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!dag.on_geodesic(v)) continue;
    std::size_t root = sets.find(v);
    std::size_t& r = rep[root];
    auto rank = [&](std::size_t x) {
      int endpoint = x == a ? 0 : x == b ? 1 : 2;
      return std::make_tuple(endpoint, dist[x], x);
    };
    if (r == kInfinity || rank(v) < rank(r)) r = v;
  }

  ReducedInstance out;
  std::vector<Vertex> names;
  std::vector<VertexPair> edges;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!dag.on_geodesic(v)) {
      out.vertex_map[g.name(v)] = std::nullopt;
      continue;
    }
    const Vertex& image = g.name(rep[sets.find(v)]);
    out.vertex_map[g.name(v)] = image;
    if (rep[sets.find(v)] == v) names.push_back(image);
  }
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v : dag.successors()[u]) {
      std::size_t ru = rep[sets.find(u)], rv = rep[sets.find(v)];
      if (ru != rv) edges.emplace_back(g.name(ru), g.name(rv));
    }
  // Merging can only produce parallel copies of identical pairs; drop them.
  for (auto& e : edges)
    if (natural_less(e.second, e.first)) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  out.graph = Graph::from_edges(std::move(names), edges);
  out.source = g.name(rep[sets.find(a)]);
  out.target = g.name(rep[sets.find(b)]);
  out.collapsed = sets.find(a) == sets.find(b);
  return out;
}

}  // namespace spg
