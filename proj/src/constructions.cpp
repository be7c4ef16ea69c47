#include "spg/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spg/error.hpp"
#include "spg/induced.hpp"

namespace spg {

namespace {

std::string idx(const std::string& stem, std::size_t i) { return stem + std::to_string(i); }

std::size_t base_distance(const BaseInstance& inst) {
  std::size_t d = distances(inst.graph(), inst.source_index())[inst.target_index()];
  if (d == kInfinity)
    throw NoGeodesicError("no geodesic: " + inst.source() + " and " + inst.target() + " are disconnected");
  return d;
}

// Renames every vertex through `rename`.
Graph relabel(const Graph& g, const std::function<Vertex(const Vertex&)>& rename) {
  std::vector<Vertex> names;
  for (const auto& v : g.vertices()) names.push_back(rename(v));
  std::vector<VertexPair> edges;
  for (const auto& [u, v] : g.named_edges()) edges.emplace_back(rename(u), rename(v));
  return Graph::from_edges(std::move(names), edges);
}

bool has_vertex(const Graph& g, const Vertex& v) { return g.find(v).has_value(); }

}  // namespace

std::string path_label(const std::vector<Vertex>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '-';
    out += path[i];
  }
  return out;
}

ConstructionResult parallel_paths(std::size_t t, std::size_t len) {
  if (t < 1) throw PreconditionError("parallel_paths needs t >= 1");
  if (len < 3) throw PreconditionError("parallel_paths needs path length >= 3");
  std::vector<Vertex> names{"a", "b"};
  std::vector<VertexPair> edges;
  for (std::size_t j = 1; j <= t; ++j) {
    Vertex prev = "a";
    for (std::size_t i = 1; i < len; ++i) {
      Vertex v = "p" + std::to_string(j) + "_" + std::to_string(i);
      names.push_back(v);
      edges.emplace_back(prev, v);
      prev = v;
    }
    edges.emplace_back(prev, "b");
  }
  return {BaseInstance(Graph::from_edges(std::move(names), edges), "a", "b"),
          {"empty", {t}, empty_graph(t)},
          {}};
}

ConstructionResult path_base(std::size_t k) {
  if (k < 1) throw PreconditionError("path_base needs k >= 1");
  const std::size_t lo = k / 2, hi = (k + 1) / 2;
  auto v = [](std::size_t i) { return idx("v", i); };
  auto vp = [](std::size_t i) { return idx("v", i) + "'"; };
  std::vector<Vertex> names{"a", "b"};
  for (std::size_t i = 0; i <= lo; ++i) names.push_back(v(i));
  for (std::size_t i = 0; i <= hi; ++i) names.push_back(vp(i));
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i <= lo; ++i) {
    edges.emplace_back("a", v(i));
    edges.emplace_back(v(i), vp(i));
  }
  for (std::size_t i = 1; i <= hi; ++i) edges.emplace_back(v(i - 1), vp(i));
  for (std::size_t i = 0; i <= hi; ++i) edges.emplace_back(vp(i), "b");
  return {BaseInstance(Graph::from_edges(std::move(names), edges), "a", "b"),
          {"path", {k}, path_graph(k)},
          {}};
}

ConstructionResult complete_base(std::size_t n) {
  if (n < 1) throw PreconditionError("complete_base needs n >= 1");
  std::vector<Vertex> names{"a", "b"};
  std::vector<VertexPair> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(idx("m", i));
    edges.emplace_back("a", idx("m", i));
    edges.emplace_back(idx("m", i), "b");
  }
  return {BaseInstance(Graph::from_edges(std::move(names), edges), "a", "b"),
          {"complete", {n}, complete_graph(n)},
          {}};
}

ConstructionResult even_cycle_base(std::size_t n) {
  if (n < 2) throw PreconditionError("even_cycle_base needs n >= 2");
  auto v = [](std::size_t i) { return idx("v", i); };
  auto vp = [](std::size_t i) { return idx("v", i) + "'"; };
  std::vector<Vertex> names{"a", "b"};
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(v(i));
    names.push_back(vp(i));
    edges.emplace_back("a", v(i));
    edges.emplace_back("b", vp(i));
    edges.emplace_back(v(i), vp(i));
    edges.emplace_back(v(i), vp((i + 1) % n));
  }
  return {BaseInstance(Graph::from_edges(std::move(names), edges), "a", "b"),
          {"cycle", {2 * n}, cycle_graph(2 * n)},
          {}};
}

ConstructionResult odd_cycle_host_base(std::size_t p) {
  if (p < 3) throw PreconditionError("odd_cycle_host_base needs p >= 3");
  auto v = [](std::size_t i) { return idx("v", i); };
  auto vp = [](std::size_t i) { return idx("v", i) + "'"; };
  const Vertex v1pp = "v1''";
  std::vector<Vertex> names{"a", "b", v1pp};
  for (std::size_t i = 1; i <= p; ++i) {
    names.push_back(v(i));
    names.push_back(vp(i));
  }
  std::vector<VertexPair> edges{{"a", v(1)}, {"a", vp(1)}, {"b", v(p)}, {"b", vp(p)},
                                {"a", v1pp}, {v1pp, vp(2)}, {v1pp, v(2)}};
  for (std::size_t i = 1; i < p; ++i) {
    edges.emplace_back(v(i), v(i + 1));
    edges.emplace_back(vp(i), vp(i + 1));
    edges.emplace_back(v(i), vp(i + 1));
    edges.emplace_back(vp(i), v(i + 1));
  }
  BaseInstance inst(Graph::from_edges(std::move(names), edges), "a", "b");

  // Positions 2..p primed according to `primed`, first interior vertex `first`.
  auto make = [&](const Vertex& first, const std::vector<bool>& primed) {
    std::vector<Vertex> path{"a", first};
    for (std::size_t i = 2; i <= p; ++i) path.push_back(primed[i] ? vp(i) : v(i));
    path.push_back("b");
    return path;
  };
  std::vector<std::vector<Vertex>> witness;
  std::vector<bool> primed(p + 1, false);
  witness.push_back(make(v(1), primed));
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 2; i <= p; ++i) primed[i] = i <= j + 1;
    witness.push_back(make(vp(1), primed));
  }
  for (std::size_t u = 0; u + 1 < p; ++u) {
    for (std::size_t i = 2; i <= p; ++i) primed[i] = i > u + 1;
    witness.push_back(make(v1pp, primed));
  }
  for (std::size_t i = 2; i <= p; ++i) primed[i] = i == p;
  witness.push_back(make(v(1), primed));

  // Validate: every listed path is a geodesic and together they induce a cycle.
  SpGraph h = build_spg(inst);
  std::map<std::vector<Vertex>, std::size_t> position;
  for (std::size_t k = 0; k < h.order(); ++k)
    position[geodesic_names(inst.graph(), h.geodesics()[k])] = k;
  std::vector<std::size_t> cycle;
  for (const auto& path : witness) {
    auto it = position.find(path);
    if (it == position.end()) throw Error("odd-cycle host: listed path is not a geodesic: " + path_label(path));
    cycle.push_back(it->second);
  }
  if (!is_induced_occurrence(h.graph(), Pattern::cycle(2 * p + 1), cycle))
    throw Error("odd-cycle host: listed geodesics do not induce C" + std::to_string(2 * p + 1));

  return {std::move(inst), {"induced-cycle", {2 * p + 1}, cycle_graph(2 * p + 1)}, std::move(witness)};
}

ConstructionResult hypercube_base(std::size_t k) {
  if (k < 1) throw PreconditionError("hypercube_base needs k >= 1");
  std::vector<Vertex> names;
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i <= k; ++i) names.push_back(idx("c", i));
  for (std::size_t i = 1; i <= k; ++i) {
    names.push_back(idx("u", i));
    names.push_back(idx("w", i));
    edges.emplace_back(idx("c", i - 1), idx("u", i));
    edges.emplace_back(idx("u", i), idx("c", i));
    edges.emplace_back(idx("c", i - 1), idx("w", i));
    edges.emplace_back(idx("w", i), idx("c", i));
  }
  return {BaseInstance(Graph::from_edges(std::move(names), edges), "c0", idx("c", k)),
          {"hypercube", {k}, hypercube_graph(k)},
          {}};
}

BaseInstance extend_distance(const BaseInstance& inst, std::size_t new_distance) {
  const std::size_t d = base_distance(inst);
  if (new_distance < d)
    throw PreconditionError("cannot shorten d(a,b) = " + std::to_string(d) + " to " +
                            std::to_string(new_distance));
  if (new_distance == d) return inst;
  const Graph& g = inst.graph();
  std::string stem = inst.target() + "~";
  auto clashes = [&](const std::string& s) {
    for (std::size_t t = 1; t <= new_distance - d; ++t)
      if (has_vertex(g, s + std::to_string(t))) return true;
    return false;
  };
  while (clashes(stem)) stem += "~";
  std::vector<Vertex> names = g.vertices();
  std::vector<VertexPair> edges = g.named_edges();
  Vertex prev = inst.target();
  for (std::size_t t = 1; t <= new_distance - d; ++t) {
    Vertex v = stem + std::to_string(t);
    names.push_back(v);
    edges.emplace_back(prev, v);
    prev = v;
  }
  return BaseInstance(Graph::from_edges(std::move(names), edges), inst.source(), prev);
}

ConstructionResult union_base(const BaseInstance& first, const BaseInstance& second, std::size_t limit) {
  const std::size_t d = std::max(base_distance(first), base_distance(second));
  auto prefixed = [](const BaseInstance& inst, const std::string& tag) {
    return BaseInstance(relabel(inst.graph(), [&](const Vertex& v) { return tag + v; }),
                        tag + inst.source(), tag + inst.target());
  };
  BaseInstance left = extend_distance(prefixed(first, "L:"), d);
  BaseInstance right = extend_distance(prefixed(second, "R:"), d);

  std::vector<Vertex> names{"a", "b"};
  std::vector<VertexPair> edges{{"a", left.source()}, {"a", right.source()},
                                {left.target(), "b"}, {right.target(), "b"}};
  for (const auto* side : {&left, &right}) {
    for (const auto& v : side->graph().vertices()) names.push_back(v);
    for (const auto& e : side->graph().named_edges()) edges.push_back(e);
  }
  Graph predicted = disjoint_union(build_spg(first, limit).graph(), build_spg(second, limit).graph());
  return {BaseInstance(Graph::from_edges(std::move(names), edges), "a", "b"),
          {"union", {}, std::move(predicted)},
          {}};
}

Graph glue_one_sum(const Graph& g1, const Graph& g2, const Vertex& c) {
  std::vector<Vertex> shared;
  for (const auto& v : g2.vertices())
    if (has_vertex(g1, v)) shared.push_back(v);
  if (shared.size() != 1 || shared.front() != c)
    throw PreconditionError("one-sum needs vertex sets meeting exactly in {" + c + "}");
  std::vector<Vertex> names = g1.vertices();
  for (const auto& v : g2.vertices())
    if (v != c) names.push_back(v);
  std::vector<VertexPair> edges = g1.named_edges();
  for (const auto& e : g2.named_edges()) edges.push_back(e);
  return Graph::from_edges(std::move(names), edges);
}

ConstructionResult one_sum(const BaseInstance& first, const BaseInstance& second, std::size_t limit) {
  const Graph& g1 = first.graph();
  const Vertex& c = first.target();
  std::string tag = "R:";
  auto rename = [&](const Vertex& v) { return v == second.source() ? c : tag + v; };
  auto collides = [&] {
    for (const auto& v : second.graph().vertices())
      if (v != second.source() && has_vertex(g1, tag + v)) return true;
    return false;
  };
  while (collides()) tag = "R" + tag;
  Graph g2 = relabel(second.graph(), rename);
  Graph glued = glue_one_sum(g1, g2, c);
  Graph predicted = cartesian_product(build_spg(first, limit).graph(), build_spg(second, limit).graph());
  return {BaseInstance(std::move(glued), first.source(), rename(second.target())),
          {"product", {}, std::move(predicted)},
          {}};
}

BaseInstance two_sum(const Graph& g1, const Graph& g2, const Vertex& x, const Vertex& y,
                     const Vertex& a, const Vertex& b) {
  if (x == y) throw PreconditionError("two-sum edge needs distinct endpoints");
  std::set<Vertex> shared;
  for (const auto& v : g2.vertices())
    if (has_vertex(g1, v)) shared.insert(v);
  if (shared != std::set<Vertex>{x, y})
    throw PreconditionError("two-sum needs vertex sets meeting exactly in {" + x + "," + y + "}");
  if (!g1.adjacent(g1.index_of(x), g1.index_of(y)) || !g2.adjacent(g2.index_of(x), g2.index_of(y)))
    throw PreconditionError("both graphs must contain the edge " + x + y);
  if (!has_vertex(g1, a) || a == x || a == y)
    throw PreconditionError("a must be a vertex of G1 other than x, y");
  if (!has_vertex(g2, b) || b == x || b == y)
    throw PreconditionError("b must be a vertex of G2 other than x, y");
  std::vector<Vertex> names = g1.vertices();
  for (const auto& v : g2.vertices())
    if (v != x && v != y) names.push_back(v);
  std::vector<VertexPair> edges = g1.named_edges();
  for (const auto& [u, v] : g2.named_edges()) {
    bool is_shared_edge = (u == x && v == y) || (u == y && v == x);
    if (!is_shared_edge) edges.emplace_back(u, v);
  }
  return BaseInstance(Graph::from_edges(std::move(names), edges), a, b);
}

namespace {

struct ProductPaths {
  // Concatenated path per product vertex, plus its two factor coordinates.
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// S(G1,a,m) x S(G2,m,b) laid out as concatenated paths.
ProductPaths product_paths(const BaseInstance& left, const BaseInstance& right, std::size_t limit) {
  SpGraph sl = build_spg(left, limit);
  SpGraph sr = build_spg(right, limit);
  ProductPaths out;
  const std::size_t nr = sr.order();
  for (std::size_t i = 0; i < sl.order(); ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      std::vector<Vertex> path = geodesic_names(left.graph(), sl.geodesics()[i]);
      auto tail = geodesic_names(right.graph(), sr.geodesics()[j]);
      path.insert(path.end(), tail.begin() + 1, tail.end());
      out.paths.push_back(std::move(path));
      out.coords.emplace_back(i, j);
    }
  for (std::size_t i = 0; i < sl.order(); ++i)
    for (auto [u, w] : sr.graph().edges()) out.edges.emplace_back(i * nr + u, i * nr + w);
  for (auto [u, w] : sl.graph().edges())
    for (std::size_t j = 0; j < nr; ++j) out.edges.emplace_back(u * nr + j, w * nr + j);
  return out;
}

}  // namespace

TwoSumPrediction predict_two_sum(const Graph& g1, const Graph& g2, const Vertex& x, const Vertex& y,
                                 const Vertex& a, const Vertex& b, std::size_t limit) {
  (void)two_sum(g1, g2, x, y, a, b);  // precondition check
  TwoSumPrediction pred;
  auto da = distances(g1, a);
  auto db = distances(g2, b);
  pred.dax = da[g1.index_of(x)];
  pred.day = da[g1.index_of(y)];
  pred.dxb = db[g2.index_of(x)];
  pred.dyb = db[g2.index_of(y)];
  if (pred.dax == kInfinity || pred.dxb == kInfinity)
    throw NoGeodesicError("two-sum endpoints are disconnected");

  const auto [dax, day, dxb, dyb] = std::tuple{pred.dax, pred.day, pred.dxb, pred.dyb};
  if (dax == day && dxb == dyb)
    pred.which = TwoSumCase::MatchedUnion;
  else if ((dax <= day && dxb < dyb) || (dax < day && dxb <= dyb))
    pred.which = TwoSumCase::ThroughX;
  else if ((day <= dax && dyb < dxb) || (day < dax && dyb <= dxb))
    pred.which = TwoSumCase::ThroughY;
  else
    pred.which = TwoSumCase::OverlappingUnion;

  std::vector<const ProductPaths*> parts;
  ProductPaths px, py;
  if (pred.which != TwoSumCase::ThroughY) {
    px = product_paths(BaseInstance(g1, a, x), BaseInstance(g2, x, b), limit);
    parts.push_back(&px);
  }
  if (pred.which != TwoSumCase::ThroughX) {
    py = product_paths(BaseInstance(g1, a, y), BaseInstance(g2, y, b), limit);
    parts.push_back(&py);
  }

  std::set<std::string> names;
  std::set<std::pair<std::string, std::string>> edges;
  auto add_edge = [&](const std::string& u, const std::string& w) {
    edges.insert(natural_less(u, w) ? std::pair{u, w} : std::pair{w, u});
  };
  for (const auto* part : parts) {
    for (const auto& p : part->paths) names.insert(path_label(p));
    for (auto [u, w] : part->edges) add_edge(path_label(part->paths[u]), path_label(part->paths[w]));
  }
  if (pred.which == TwoSumCase::MatchedUnion) {
    // Join (alpha, beta) through x with (alpha', beta') through y when the
    // paths agree off the shared middle position.
    const std::size_t mid = dax;
    auto key = [mid](const std::vector<Vertex>& p) {
      std::vector<Vertex> k = p;
      k.erase(k.begin() + static_cast<std::ptrdiff_t>(mid));
      return k;
    };
    std::map<std::vector<Vertex>, std::vector<std::size_t>> by_key;
    for (std::size_t k = 0; k < py.paths.size(); ++k) by_key[key(py.paths[k])].push_back(k);
    for (const auto& p : px.paths) {
      auto it = by_key.find(key(p));
      if (it == by_key.end()) continue;
      for (std::size_t k : it->second) add_edge(path_label(p), path_label(py.paths[k]));
    }
  }
  std::vector<VertexPair> edge_list(edges.begin(), edges.end());
  pred.graph = Graph::from_edges(std::vector<Vertex>(names.begin(), names.end()), edge_list);
  return pred;
}

}  // namespace spg
