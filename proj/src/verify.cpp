#include "spg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "spg/error.hpp"
#include "spg/geodesics.hpp"
#include "spg/isomorphism.hpp"

namespace spg {

void CheckReport::fail(std::string description, std::vector<std::vector<std::size_t>> tuples) {
  if (!passed) return;  // keep the first witness
  passed = false;
  witness = Witness{std::move(description), std::move(tuples)};
}

namespace {

std::size_t index_gap(std::size_t i, std::size_t j) { return i > j ? i - j : j - i; }

// Some w != m adjacent to x and y but not to m, closing x-m-y into an induced C4.
std::optional<std::size_t> induced_c4_closer(const Graph& g, std::size_t x, std::size_t m, std::size_t y) {
  for (std::size_t w : g.neighbors(x))
    if (w != m && g.adjacent(w, y) && !g.adjacent(w, m)) return w;
  return std::nullopt;
}

bool claw_has_c4(const Graph& g, std::span<const std::size_t> t) {
  for (std::size_t p = 1; p < 4; ++p)
    for (std::size_t q = p + 1; q < 4; ++q)
      if (induced_c4_closer(g, t[p], t[0], t[q])) return true;
  return false;
}

enum class Shape { Trivial, Path, GoodCycle, Other };

Shape component_shape(const Graph& g, const std::vector<std::size_t>& members) {
  if (members.size() == 1) return Shape::Trivial;
  std::size_t edges = 0, max_degree = 0;
  for (std::size_t v : members) {
    edges += g.degree(v);
    max_degree = std::max(max_degree, g.degree(v));
  }
  edges /= 2;
  if (edges + 1 == members.size()) return max_degree <= 2 ? Shape::Path : Shape::Other;
  if (edges == members.size() && max_degree == 2 && members.size() % 2 == 0 && members.size() >= 6)
    return Shape::GoodCycle;
  return Shape::Other;
}

std::vector<std::vector<std::size_t>> components_of(const Graph& g) {
  auto comp = connected_components(g);
  std::size_t count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t v = 0; v < g.order(); ++v) out[comp[v]].push_back(v);
  return out;
}

// Checks that `members` (geodesics of S(inst) through v, v at position pos)
// induce a copy of S(G,a,v) x S(G,v,b) under the split of each geodesic at v.
void check_product_split(const SpGraph& h, const BaseInstance& inst, const std::vector<std::size_t>& members,
                         std::size_t v, std::size_t pos, std::size_t limit, CheckReport& r) {
  const Graph& g = inst.graph();
  const std::size_t d = h.distance();
  if (pos == 0 || pos == d) {
    if (members.size() != h.order()) r.fail("endpoint slice is not the whole graph", {members});
    return;
  }
  SpGraph left = build_spg(BaseInstance(g, inst.source(), g.name(v)), limit);
  SpGraph right = build_spg(BaseInstance(g, g.name(v), inst.target()), limit);
  Graph product = cartesian_product(left.graph(), right.graph());
  if (product.order() != members.size()) {
    r.fail("slice through " + g.name(v) + " has " + std::to_string(members.size()) + " geodesics, product has " +
               std::to_string(product.order()),
           {members});
    return;
  }
  std::map<std::vector<std::size_t>, std::size_t> left_index, right_index;
  for (std::size_t k = 0; k < left.order(); ++k) left_index[left.geodesics()[k].vertices] = k;
  for (std::size_t k = 0; k < right.order(); ++k) right_index[right.geodesics()[k].vertices] = k;
  std::vector<std::size_t> mapping(members.size());
  for (std::size_t t = 0; t < members.size(); ++t) {
    const auto& path = h.geodesics()[members[t]].vertices;
    std::vector<std::size_t> prefix(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    std::vector<std::size_t> suffix(path.begin() + static_cast<std::ptrdiff_t>(pos), path.end());
    auto lp = left_index.find(prefix);
    auto rp = right_index.find(suffix);
    if (lp == left_index.end() || rp == right_index.end()) {
      r.fail("geodesic does not split into geodesics at " + g.name(v), {{members[t]}});
      return;
    }
    mapping[t] = product.index_of("(" + left.graph().name(lp->second) + "," + right.graph().name(rp->second) + ")");
  }
  Graph slice = induced_subgraph(h.graph(), members);
  if (!is_isomorphism(slice, product, mapping))
    r.fail("split at " + g.name(v) + " is not an isomorphism onto the product", {members});
}

SpGraph checked_spg(const BaseInstance& inst, std::size_t limit) {
  SpGraph h = build_spg(inst, limit);
  if (h.order() == 0) throw NoGeodesicError("no geodesic between " + inst.source() + " and " + inst.target());
  return h;
}

std::string joined_label(const Graph& g, const Geodesic& p) { return path_label(geodesic_names(g, p)); }

void compare_isomorphic(const Graph& actual, const Graph& predicted, const std::string& what, CheckReport& r) {
  if (!is_isomorphic(actual, predicted)) r.fail(what + ": computed graph is not isomorphic to the prediction");
}

}  // namespace

CheckReport check_p3_distinct_indices(const SpGraph& h) {
  CheckReport r{"p3-indices"};
  const Graph& g = h.graph();
  std::uint64_t examined = 0;
  for (std::size_t m = 0; m < g.order() && r.passed; ++m) {
    auto nb = g.neighbors(m);
    const auto& idx = h.neighbor_indices(m);
    for (std::size_t p = 0; p < nb.size() && r.passed; ++p)
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        if (g.adjacent(nb[p], nb[q])) continue;
        ++examined;
        if (idx[p] == idx[q]) {
          r.fail("induced P3 with both edges at index " + std::to_string(idx[p]), {{nb[p], m, nb[q]}});
          break;
        }
      }
  }
  r.stats["induced_p3"] = examined;
  return r;
}

CheckReport check_p3_c4(const SpGraph& h, SearchLimits) {
  CheckReport r{"p3c4"};
  const Graph& g = h.graph();
  std::uint64_t examined = 0, applicable = 0;
  for (std::size_t m = 0; m < g.order() && r.passed; ++m) {
    auto nb = g.neighbors(m);
    const auto& idx = h.neighbor_indices(m);
    for (std::size_t p = 0; p < nb.size() && r.passed; ++p)
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        if (g.adjacent(nb[p], nb[q])) continue;
        ++examined;
        if (index_gap(idx[p], idx[q]) < 2) continue;
        ++applicable;
        if (!induced_c4_closer(g, nb[p], m, nb[q])) {
          r.fail("induced P3 with indices " + std::to_string(idx[p]) + "," + std::to_string(idx[q]) +
                     " on no induced C4",
                 {{nb[p], m, nb[q]}});
          break;
        }
      }
  }
  r.stats["induced_p3"] = examined;
  r.stats["far_index_p3"] = applicable;
  return r;
}

CheckReport check_no_induced_c5(const SpGraph& h, SearchLimits limits) {
  CheckReport r{"noc5"};
  auto found = find_induced(h.graph(), Pattern::c5(), limits);
  r.stats["induced_c5"] = found.size();
  if (!found.empty()) r.fail("induced C5", {found.front()});
  return r;
}

CheckReport check_claw_in_c4(const SpGraph& h, SearchLimits limits) {
  CheckReport r{"claw"};
  const Graph& g = h.graph();
  std::uint64_t claws = 0;
  for_each_induced(
      g, Pattern::claw(),
      [&](std::span<const std::size_t> t) {
        ++claws;
        if (claw_has_c4(g, t)) return true;
        r.fail("induced claw with no two edges on an induced C4", {{t.begin(), t.end()}});
        return false;
      },
      limits);
  r.stats["induced_claws"] = claws;
  return r;
}

CheckReport check_odd_cycle_c4(const SpGraph& h, std::size_t cap, SearchLimits limits) {
  CheckReport r{"oddcycle"};
  r.stats["cap"] = cap;
  const Graph& g = h.graph();
  if (contains_induced(g, Pattern::c4(), limits)) {
    r.stats["has_c4"] = 1;
    return r;
  }
  r.stats["has_c4"] = 0;
  if (is_bipartite(g)) return r;
  for (std::size_t k = 5; k <= cap; k += 2) {
    auto found = find_induced(g, Pattern::cycle(k), limits);
    if (!found.empty()) {
      r.fail("induced C" + std::to_string(k) + " in a graph without induced C4", {found.front()});
      break;
    }
  }
  return r;
}

CheckReport check_girth5_classification(const SpGraph& h) {
  CheckReport r{"girth5"};
  const Graph& g = h.graph();
  const std::size_t gi = girth(g);
  r.stats["girth"] = gi == kInfinity ? 0 : gi;
  if (gi < 5) return r;
  std::uint64_t paths = 0, cycles = 0;
  for (const auto& members : components_of(g)) {
    switch (component_shape(g, members)) {
      case Shape::Trivial:
        break;
      case Shape::Path:
        ++paths;
        break;
      case Shape::GoodCycle:
        ++cycles;
        break;
      case Shape::Other:
        r.fail("component is neither a path nor an even cycle of length >= 6", {members});
        break;
    }
  }
  r.stats["path_components"] = paths;
  r.stats["cycle_components"] = cycles;
  return r;
}

CheckReport check_decomposition(const BaseInstance& inst, std::size_t i, std::size_t limit) {
  CheckReport r{"decomp"};
  SpGraph h = checked_spg(inst, limit);
  Decomposition dec = decompose_at_index(h, i);
  r.stats["index"] = i;
  r.stats["components"] = dec.components.size();
  r.stats["cross_edges"] = dec.cross_edges.size();

  GeodesicDag dag = build_dag(inst);
  std::vector<std::size_t> expected;
  for (std::size_t v = 0; v < inst.graph().order(); ++v)
    if (dag.on_geodesic(v) && dag.dist_from_a()[v] == i) expected.push_back(v);
  if (expected != dec.middle_vertices) {
    r.fail("groups do not match the geodesic vertices at distance " + std::to_string(i),
           {expected, dec.middle_vertices});
    return r;
  }

  std::vector<std::size_t> group(h.order());
  for (std::size_t j = 0; j < dec.components.size(); ++j)
    for (std::size_t u : dec.components[j]) group[u] = j;
  for (const auto& e : h.edges())
    if ((e.index == i) != (group[e.u] != group[e.w])) {
      r.fail("edge at index " + std::to_string(e.index) + " disagrees with the grouping", {{e.u, e.w}});
      return r;
    }

  for (std::size_t j = 0; j < dec.components.size() && r.passed; ++j)
    check_product_split(h, inst, dec.components[j], dec.middle_vertices[j], i, limit, r);

  // Each vertex has at most one neighbour in every other group.
  for (std::size_t u = 0; u < h.order() && r.passed; ++u) {
    std::map<std::size_t, std::size_t> seen;
    for (std::size_t w : h.graph().neighbors(u)) {
      if (group[w] == group[u]) continue;
      auto [it, fresh] = seen.emplace(group[w], w);
      if (!fresh) {
        r.fail("cross edges between two groups are not a partial matching", {{u, it->second, w}});
        break;
      }
    }
  }
  return r;
}

CheckReport check_all_decompositions(const BaseInstance& inst, std::size_t limit) {
  CheckReport r{"decomp"};
  SpGraph h = checked_spg(inst, limit);
  std::uint64_t indices = 0;
  for (std::size_t i = 1; i + 1 <= h.distance() && r.passed; ++i) {
    CheckReport one = check_decomposition(inst, i, limit);
    ++indices;
    r.stats["components"] += one.stats["components"];
    r.stats["cross_edges"] += one.stats["cross_edges"];
    if (!one.passed) {
      one.witness->description = "index " + std::to_string(i) + ": " + one.witness->description;
      r.passed = false;
      r.witness = one.witness;
    }
  }
  r.stats["indices"] = indices;
  return r;
}

CheckReport check_concatenation(const BaseInstance& inst, const Vertex& v, std::size_t limit) {
  CheckReport r{"concat"};
  SpGraph h = checked_spg(inst, limit);
  const std::size_t x = inst.graph().index_of(v);
  GeodesicDag dag = build_dag(inst);
  if (!dag.on_geodesic(x)) throw PreconditionError("vertex " + v + " lies on no geodesic");
  const std::size_t pos = dag.dist_from_a()[x];
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < h.order(); ++k)
    if (h.geodesics()[k].vertices[pos] == x) members.push_back(k);
  SpGraph slice = vertex_slice(inst, v, limit);
  if (slice.order() != members.size()) r.fail("vertex_slice disagrees with the geodesics through " + v, {members});
  r.stats["slice_order"] = members.size();
  if (r.passed) check_product_split(h, inst, members, x, pos, limit, r);
  return r;
}

CheckReport check_complete_iff_same_index(const BaseInstance& inst, std::size_t limit) {
  CheckReport r{"complete"};
  SpGraph h = checked_spg(inst, limit);
  const std::size_t n = h.order();
  const bool complete = h.size() == n * (n - 1) / 2;
  std::vector<std::size_t> varying;
  for (std::size_t pos = 1; pos < h.distance(); ++pos)
    for (std::size_t k = 1; k < n; ++k)
      if (h.geodesics()[k].vertices[pos] != h.geodesics()[0].vertices[pos]) {
        varying.push_back(pos);
        break;
      }
  const bool same_index = n < 2 || varying.size() == 1;
  r.stats["geodesics"] = n;
  r.stats["complete"] = complete;
  r.stats["same_index"] = same_index;
  if (complete != same_index) {
    r.fail(std::string(complete ? "complete" : "not complete") + " but geodesics vary at " +
               std::to_string(varying.size()) + " positions",
           {varying});
    return r;
  }
  if (complete && n >= 2 && n + 2 <= IsoOptions{}.max_vertices) {
    ReducedInstance red = reduce(inst);
    if (red.collapsed) {
      r.fail("reduced instance collapsed although there are several geodesics");
      return r;
    }
    Graph k2n = complete_bipartite(2, n);
    std::vector<std::size_t> c1(red.graph.order(), 0), c2(k2n.order(), 0);
    c1[red.graph.index_of(red.source)] = c1[red.graph.index_of(red.target)] = 1;
    c2[k2n.index_of("a0")] = c2[k2n.index_of("a1")] = 1;
    if (!is_isomorphic(red.graph, k2n, c1, c2)) r.fail("reduced instance is not K_{2,n} with a,b on the small side");
  }
  return r;
}

CheckReport check_one_sum(const BaseInstance& first, const BaseInstance& second, std::size_t limit) {
  CheckReport r{"one-sum"};
  ConstructionResult built = one_sum(first, second, limit);
  SpGraph h = build_spg(built.instance, limit);
  r.stats["order"] = h.order();
  compare_isomorphic(h.graph(), built.predicted.graph, "one-sum", r);
  return r;
}

CheckReport check_union(const BaseInstance& first, const BaseInstance& second, std::size_t limit) {
  CheckReport r{"union"};
  ConstructionResult built = union_base(first, second, limit);
  SpGraph h = build_spg(built.instance, limit);
  r.stats["order"] = h.order();
  const Graph& g = built.instance.graph();
  auto side = [&](std::size_t k) { return g.name(h.geodesics()[k].vertices[1]).substr(0, 2); };
  for (const auto& e : h.edges())
    if (side(e.u) != side(e.w)) {
      r.fail("edge between geodesics on different sides", {{e.u, e.w}});
      return r;
    }
  compare_isomorphic(h.graph(), built.predicted.graph, "union", r);
  return r;
}

CheckReport check_two_sum(const Graph& g1, const Graph& g2, const Vertex& x, const Vertex& y, const Vertex& a,
                          const Vertex& b, std::size_t limit) {
  CheckReport r{"two-sum"};
  BaseInstance inst = two_sum(g1, g2, x, y, a, b);
  TwoSumPrediction pred = predict_two_sum(g1, g2, x, y, a, b, limit);
  SpGraph h = build_spg(inst, limit);
  r.stats["case"] = static_cast<std::uint64_t>(pred.which);
  r.stats["order"] = h.order();

  // Predicted vertices are named by geodesic, so the bijection is explicit.
  std::vector<std::size_t> mapping(h.order());
  bool labelled = h.order() == pred.graph.order();
  for (std::size_t k = 0; k < h.order() && labelled; ++k) {
    auto image = pred.graph.find(joined_label(inst.graph(), h.geodesics()[k]));
    if (!image) labelled = false;
    else mapping[k] = *image;
  }
  if (!labelled) {
    r.fail("predicted vertex set differs from the geodesics of the sum");
    return r;
  }
  if (!is_isomorphism(h.graph(), pred.graph, mapping)) {
    r.fail("identity on geodesics is not an isomorphism onto the prediction");
    return r;
  }
  if (pred.which != TwoSumCase::OverlappingUnion) {
    const Graph& g = inst.graph();
    BaseInstance without(remove_edge(g, g.index_of(x), g.index_of(y)), a, b);
    SpGraph h2 = build_spg(without, limit);
    compare_isomorphic(h2.graph(), h.graph(), "two-sum without the shared edge", r);
  }
  return r;
}

CheckReport check_construction(const ConstructionResult& result, std::size_t limit) {
  CheckReport r{"construction:" + result.predicted.family};
  SpGraph h = build_spg(result.instance, limit);
  r.stats["order"] = h.order();
  r.stats["size"] = h.size();
  if (result.predicted.family != "induced-cycle") {
    compare_isomorphic(h.graph(), result.predicted.graph, result.predicted.family, r);
    return r;
  }
  const Graph& g = result.instance.graph();
  std::map<std::string, std::size_t> by_label;
  for (std::size_t k = 0; k < h.order(); ++k) by_label[joined_label(g, h.geodesics()[k])] = k;
  std::vector<std::size_t> cycle;
  for (const auto& path : result.witness_paths) {
    auto it = by_label.find(path_label(path));
    if (it == by_label.end()) {
      r.fail("witness " + path_label(path) + " is not a geodesic");
      return r;
    }
    cycle.push_back(it->second);
  }
  if (!is_induced_occurrence(h.graph(), Pattern::cycle(cycle.size()), cycle))
    r.fail("witness geodesics do not induce a cycle", {cycle});
  return r;
}

bool witness_refutes(const SpGraph& h, const CheckReport& report) {
  if (report.passed || !report.witness || report.witness->tuples.empty()) return false;
  const Graph& g = h.graph();
  const auto& t = report.witness->tuples.front();
  for (std::size_t v : t)
    if (v >= g.order()) return false;
  if (report.name == "p3-indices")
    return is_induced_occurrence(g, Pattern::p3(), t) && h.edge_index(t[0], t[1]) == h.edge_index(t[1], t[2]);
  if (report.name == "p3c4")
    return is_induced_occurrence(g, Pattern::p3(), t) &&
           index_gap(*h.edge_index(t[0], t[1]), *h.edge_index(t[1], t[2])) >= 2 &&
           !induced_c4_closer(g, t[0], t[1], t[2]);
  if (report.name == "noc5") return is_induced_occurrence(g, Pattern::c5(), t);
  if (report.name == "claw") return is_induced_occurrence(g, Pattern::claw(), t) && !claw_has_c4(g, t);
  if (report.name == "oddcycle")
    return t.size() >= 5 && t.size() % 2 == 1 && is_induced_occurrence(g, Pattern::cycle(t.size()), t) &&
           !contains_induced(g, Pattern::c4());
  if (report.name == "girth5") {
    auto comp = connected_components(g);
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < g.order(); ++v)
      if (comp[v] == comp[t.front()]) members.push_back(v);
    return girth(g) >= 5 && component_shape(g, members) == Shape::Other;
  }
  return false;
}

const std::vector<std::string>& spgraph_check_names() {
  static const std::vector<std::string> names{"p3-indices", "p3c4", "noc5", "claw", "oddcycle", "girth5"};
  return names;
}

CheckReport run_spgraph_check(const std::string& name, const SpGraph& h) {
  if (name == "p3-indices") return check_p3_distinct_indices(h);
  if (name == "p3c4") return check_p3_c4(h);
  if (name == "noc5") return check_no_induced_c5(h);
  if (name == "claw") return check_claw_in_c4(h);
  if (name == "oddcycle") return check_odd_cycle_c4(h);
  if (name == "girth5") return check_girth5_classification(h);
  throw PreconditionError("unknown check: " + name);
}

}  // namespace spg
