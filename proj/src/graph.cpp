#include "spg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "spg/error.hpp"

namespace spg {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// -1, 0, 1 under natural ordering, ignoring leading zeros in digit runs.
int natural_compare(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js ? -1 : 1;
      if (int c = a.substr(is, ie - is).compare(b.substr(js, je - js)); c != 0)
        return c < 0 ? -1 : 1;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

}  // namespace

bool natural_less(std::string_view lhs, std::string_view rhs) {
  int c = natural_compare(lhs, rhs);
  if (c != 0) return c < 0;
  return lhs < rhs;
}

Graph Graph::from_edges(std::vector<Vertex> vertices, const std::vector<VertexPair>& edges) {
  Graph g;
  if (!std::is_sorted(vertices.begin(), vertices.end(), natural_less))
    std::sort(vertices.begin(), vertices.end(), natural_less);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw GraphFormatError("duplicate vertex: " + vertices[i]);
  g.names_ = std::move(vertices);
  g.adj_.assign(g.names_.size(), {});
  for (const auto& [u, v] : edges) {
    if (u == v) throw GraphFormatError("self-loop at vertex " + u);
    auto iu = g.find(u);
    auto iv = g.find(v);
    if (!iu) throw GraphFormatError("edge endpoint not in vertex list: " + u);
    if (!iv) throw GraphFormatError("edge endpoint not in vertex list: " + v);
    g.adj_[*iu].push_back(*iv);
    g.adj_[*iv].push_back(*iu);
  }
  for (std::size_t v = 0; v < g.adj_.size(); ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end())
      throw GraphFormatError("duplicate edge: " + g.names_[v] + " " + g.names_[*dup]);
  }
  g.edge_count_ = edges.size();
  return g;
}

Graph Graph::indexed(std::size_t n, const std::vector<IndexPair>& edges) {
  Graph g;
  g.names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.names_.push_back(std::to_string(i));
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u == v) throw GraphFormatError("self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) throw GraphFormatError("edge endpoint out of range");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw GraphFormatError("duplicate edge");
  }
  g.edge_count_ = edges.size();
  return g;
}

std::optional<std::size_t> Graph::find(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id,
                             [](const Vertex& a, std::string_view b) { return natural_less(a, b); });
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Graph::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw UnknownVertexError(std::string(id));
  return *i;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  std::size_t other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

std::vector<IndexPair> Graph::edges() const {
  std::vector<IndexPair> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (std::size_t v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<VertexPair> Graph::named_edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (auto [u, v] : edges()) out.emplace_back(names_[u], names_[v]);
  return out;
}

BaseInstance::BaseInstance(Graph graph, Vertex source, Vertex target)
    : graph_(std::move(graph)), source_(std::move(source)), target_(std::move(target)) {
  a_ = graph_.index_of(source_);
  b_ = graph_.index_of(target_);
  if (a_ == b_) throw PreconditionError("source and target must be distinct: " + source_);
}

std::vector<std::size_t> distances(const Graph& g, std::size_t s) {
  std::vector<std::size_t> dist(g.order(), kInfinity);
  if (s >= g.order()) throw UnknownVertexError(std::to_string(s));
  std::vector<std::size_t> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] != kInfinity) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

std::vector<std::size_t> distances(const Graph& g, std::string_view s) {
  return distances(g, g.index_of(s));
}

std::size_t girth(const Graph& g) {
  std::size_t best = kInfinity;
  std::vector<std::size_t> dist(g.order()), parent(g.order());
  std::vector<std::size_t> queue;
  for (std::size_t root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    dist[root] = 0;
    parent[root] = kInfinity;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      if (best != kInfinity && 2 * dist[u] >= best) break;
      for (std::size_t v : g.neighbors(u)) {
        if (dist[v] == kInfinity) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  std::vector<std::size_t> comp(g.order(), kInfinity);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (comp[s] != kInfinity) continue;
    comp[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : g.neighbors(u))
        if (comp[v] == kInfinity) {
          comp[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const std::size_t n2 = g2.order();
  auto pair_name = [&](std::size_t u, std::size_t v) {
    return "(" + g1.name(u) + "," + g2.name(v) + ")";
  };
  std::vector<Vertex> names;
  names.reserve(g1.order() * n2);
  for (std::size_t u = 0; u < g1.order(); ++u)
    for (std::size_t v = 0; v < n2; ++v) names.push_back(pair_name(u, v));
  std::vector<VertexPair> edges;
  edges.reserve(g1.order() * g2.size() + n2 * g1.size());
  for (std::size_t u = 0; u < g1.order(); ++u)
    for (auto [v, w] : g2.edges()) edges.emplace_back(pair_name(u, v), pair_name(u, w));
  for (auto [u, w] : g1.edges())
    for (std::size_t v = 0; v < n2; ++v) edges.emplace_back(pair_name(u, v), pair_name(w, v));
  return Graph::from_edges(std::move(names), edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Vertex> names;
  std::vector<VertexPair> edges;
  for (const auto& v : g1.vertices()) names.push_back("L:" + v);
  for (const auto& v : g2.vertices()) names.push_back("R:" + v);
  for (const auto& [u, v] : g1.named_edges()) edges.emplace_back("L:" + u, "L:" + v);
  for (const auto& [u, v] : g2.named_edges()) edges.emplace_back("R:" + u, "R:" + v);
  return Graph::from_edges(std::move(names), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> keep) {
  std::vector<std::size_t> pos(g.order(), kInfinity);
  std::vector<Vertex> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = i;
    names.push_back(g.name(keep[i]));
  }
  std::vector<VertexPair> edges;
  for (std::size_t u : keep)
    for (std::size_t v : g.neighbors(u))
      if (u < v && pos[v] != kInfinity) edges.emplace_back(g.name(u), g.name(v));
  return Graph::from_edges(std::move(names), edges);
}

Graph remove_edge(const Graph& g, std::size_t u, std::size_t v) {
  if (!g.adjacent(u, v)) throw PreconditionError("edge not present: " + g.name(u) + " " + g.name(v));
  std::vector<VertexPair> edges;
  for (auto [x, y] : g.edges())
    if (!((x == u && y == v) || (x == v && y == u))) edges.emplace_back(g.name(x), g.name(y));
  return Graph::from_edges(g.vertices(), edges);
}

Graph path_graph(std::size_t k) {
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::indexed(k + 1, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::indexed(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::indexed(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::indexed(n, {}); }

Graph star_graph(std::size_t leaves) {
  std::vector<IndexPair> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::indexed(leaves + 1, edges);
}

Graph hypercube_graph(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<Vertex> names;
  for (std::size_t x = 0; x < n; ++x) {
    std::string bits(k, '0');
    for (std::size_t i = 0; i < k; ++i)
      if (x >> (k - 1 - i) & 1) bits[i] = '1';
    names.push_back(k == 0 ? std::string("e") : bits);
  }
  std::vector<VertexPair> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i)
      if (std::size_t y = x ^ (std::size_t{1} << i); x < y) edges.emplace_back(names[x], names[y]);
  return Graph::from_edges(std::move(names), edges);
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  std::vector<Vertex> names;
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < m; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) names.push_back("b" + std::to_string(j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
  return Graph::from_edges(std::move(names), edges);
}

}  // namespace spg
