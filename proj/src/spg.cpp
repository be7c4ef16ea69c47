#include "spg/spg.hpp"

#include <algorithm>
#include <cstdint>

#include "spg/error.hpp"

namespace spg {

namespace {

// Assembles graph + aligned labels from an edge list with u != w.
void assemble(std::size_t n, const std::vector<SpEdge>& edges, Graph& graph,
              std::vector<std::vector<std::size_t>>& labels) {
  std::vector<IndexPair> pairs;
  pairs.reserve(edges.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(n);
  for (const auto& e : edges) {
    pairs.emplace_back(e.u, e.w);
    incident[e.u].emplace_back(e.w, e.index);
    incident[e.w].emplace_back(e.u, e.index);
  }
  graph = Graph::indexed(n, pairs);
  labels.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(incident[u].begin(), incident[u].end());
    labels[u].reserve(incident[u].size());
    for (auto [w, index] : incident[u]) labels[u].push_back(index);
  }
}

}  // namespace

SpGraph SpGraph::from_labeled(std::size_t order, const std::vector<SpEdge>& edges, std::size_t distance) {
  for (const auto& e : edges)
    if (e.index == 0 || (distance > 0 && e.index >= distance))
      throw PreconditionError("difference index " + std::to_string(e.index) + " outside 1..d-1");
  SpGraph h;
  assemble(order, edges, h.graph_, h.labels_);
  h.distance_ = distance;
  return h;
}

std::optional<std::size_t> SpGraph::edge_index(std::size_t u, std::size_t w) const {
  auto nb = graph_.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), w);
  if (it == nb.end() || *it != w) return std::nullopt;
  return labels_[u][static_cast<std::size_t>(it - nb.begin())];
}

std::vector<SpEdge> SpGraph::edges() const {
  std::vector<SpEdge> out;
  out.reserve(graph_.size());
  for (std::size_t u = 0; u < order(); ++u) {
    auto nb = graph_.neighbors(u);
    for (std::size_t k = 0; k < nb.size(); ++k)
      if (u < nb[k]) out.push_back({u, nb[k], labels_[u][k]});
  }
  return out;
}

SpGraph SpGraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> pos(order(), kInfinity);
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = k;
  std::vector<SpEdge> edges;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    std::size_t u = keep[k];
    auto nb = graph_.neighbors(u);
    for (std::size_t t = 0; t < nb.size(); ++t)
      if (pos[nb[t]] != kInfinity && k < pos[nb[t]]) edges.push_back({k, pos[nb[t]], labels_[u][t]});
  }
  SpGraph h;
  assemble(keep.size(), edges, h.graph_, h.labels_);
  h.distance_ = distance_;
  h.base_names_ = base_names_;
  if (!geodesics_.empty())
    for (std::size_t u : keep) h.geodesics_.push_back(geodesics_[u]);
  return h;
}

SpGraph build_spg_from_geodesics(const Graph& base, std::vector<Geodesic> geodesics, std::size_t distance) {
  const std::size_t n = geodesics.size();
  const std::size_t len = distance + 1;
  for (const auto& p : geodesics)
    if (p.vertices.size() != len) throw PreconditionError("geodesics must all have length d(a,b)");

  // Hash of a path with position i masked = full hash - v_i * base^i.
  constexpr std::uint64_t kBase = 0x9E3779B97F4A7C15ULL;
  std::vector<std::uint64_t> power(len, 1);
  for (std::size_t i = 1; i < len; ++i) power[i] = power[i - 1] * kBase;
  std::vector<std::uint64_t> full(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < len; ++i) full[k] += (geodesics[k].vertices[i] + 1) * power[i];

  std::vector<SpEdge> edges;
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed(n);
  for (std::size_t i = 1; i + 1 < len; ++i) {
    for (std::size_t k = 0; k < n; ++k)
      keyed[k] = {full[k] - (geodesics[k].vertices[i] + 1) * power[i], k};
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t lo = 0; lo < n;) {
      std::size_t hi = lo + 1;
      while (hi < n && keyed[hi].first == keyed[lo].first) ++hi;
      for (std::size_t x = lo; x < hi; ++x)
        for (std::size_t y = x + 1; y < hi; ++y) {
          const auto& p = geodesics[keyed[x].second].vertices;
          const auto& q = geodesics[keyed[y].second].vertices;
          bool same_elsewhere = true;
          for (std::size_t j = 0; j < len && same_elsewhere; ++j)
            if (j != i && p[j] != q[j]) same_elsewhere = false;
          if (!same_elsewhere) continue;
          std::size_t u = std::min(keyed[x].second, keyed[y].second);
          std::size_t w = std::max(keyed[x].second, keyed[y].second);
          edges.push_back({u, w, i});
        }
      lo = hi;
    }
  }
  std::sort(edges.begin(), edges.end());

  SpGraph h;
  assemble(n, edges, h.graph_, h.labels_);
  h.geodesics_ = std::move(geodesics);
  h.base_names_ = base.vertices();
  h.distance_ = distance;
  return h;
}

SpGraph build_spg(const BaseInstance& inst, std::size_t limit) {
  std::optional<GeodesicDag> dag;
  try {
    dag.emplace(build_dag(inst));
  } catch (const NoGeodesicError&) {
    SpGraph empty;
    return empty;
  }
  return build_spg_from_geodesics(inst.graph(), enumerate_geodesics(*dag, limit), dag->distance());
}

std::optional<std::size_t> difference_index(const Geodesic& u, const Geodesic& w) {
  const auto& p = u.vertices;
  const auto& q = w.vertices;
  if (p.size() != q.size() || p.empty()) throw PreconditionError("geodesics differ in length");
  if (p.front() != q.front() || p.back() != q.back())
    throw PreconditionError("geodesics have different endpoints");
  std::optional<std::size_t> where;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (p[i] == q[i]) continue;
    if (where) return std::nullopt;
    where = i;
  }
  return where;
}

std::vector<SpEdge> edges_at_index(const SpGraph& h, std::size_t i) {
  if (i < 1 || i + 1 > h.distance())
    throw PreconditionError("index " + std::to_string(i) + " outside 1.." +
                            std::to_string(h.distance() == 0 ? 0 : h.distance() - 1));
  std::vector<SpEdge> out;
  for (const auto& e : h.edges())
    if (e.index == i) out.push_back(e);
  return out;
}

Decomposition decompose_at_index(const SpGraph& h, std::size_t i) {
  if (i < 1 || i + 1 > h.distance())
    throw PreconditionError("index " + std::to_string(i) + " outside 1.." +
                            std::to_string(h.distance() == 0 ? 0 : h.distance() - 1));
  if (h.geodesics().size() != h.order())
    throw PreconditionError("decomposition needs the geodesics behind the graph");
  Decomposition dec;
  dec.index = i;
  for (const auto& p : h.geodesics()) dec.middle_vertices.push_back(p.vertices[i]);
  std::sort(dec.middle_vertices.begin(), dec.middle_vertices.end());
  dec.middle_vertices.erase(std::unique(dec.middle_vertices.begin(), dec.middle_vertices.end()),
                            dec.middle_vertices.end());
  std::vector<std::size_t> group(h.order());
  dec.components.assign(dec.middle_vertices.size(), {});
  for (std::size_t u = 0; u < h.order(); ++u) {
    auto it = std::lower_bound(dec.middle_vertices.begin(), dec.middle_vertices.end(),
                               h.geodesics()[u].vertices[i]);
    group[u] = static_cast<std::size_t>(it - dec.middle_vertices.begin());
    dec.components[group[u]].push_back(u);
  }
  for (const auto& e : h.edges())
    if (group[e.u] != group[e.w]) dec.cross_edges.push_back({e, group[e.u], group[e.w]});
  return dec;
}

SpGraph vertex_slice(const BaseInstance& inst, const Vertex& v, std::size_t limit) {
  const std::size_t x = inst.graph().index_of(v);
  SpGraph h = build_spg(inst, limit);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < h.order(); ++k) {
    const auto& p = h.geodesics()[k].vertices;
    if (std::find(p.begin(), p.end(), x) != p.end()) keep.push_back(k);
  }
  if (keep.empty()) throw PreconditionError("vertex " + v + " lies on no geodesic");
  return h.induced(keep);
}

}  // namespace spg
