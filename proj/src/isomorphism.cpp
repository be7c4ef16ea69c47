#include "spg/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "spg/error.hpp"

namespace spg {

namespace {

// Colour refinement run jointly on g1 and g2 so that colour ids are
// comparable across the two graphs. Vertices of g2 are offset by |V(g1)|.
class JointSearch {
 public:
  JointSearch(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n1_(g1.order()) {}

  std::optional<std::vector<std::size_t>> run(std::vector<std::size_t> colors) {
    if (!refine(colors)) return std::nullopt;
    return search(colors);
  }

 private:
  std::span<const std::size_t> neighbors(std::size_t v) const {
    return v < n1_ ? g1_.neighbors(v) : g2_.neighbors(v - n1_);
  }
  std::size_t offset(std::size_t v) const { return v < n1_ ? 0 : n1_; }

  // Refines to the coarsest equitable colouring; false if the two halves
  // end up with different colour class sizes.
  bool refine(std::vector<std::size_t>& colors) const {
    const std::size_t n = colors.size();
    std::size_t classes = count_classes(colors);
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    std::vector<std::size_t> order(n);
    while (true) {
      for (std::size_t v = 0; v < n; ++v) {
        sig[v].first = colors[v];
        auto& nb = sig[v].second;
        nb.clear();
        for (std::size_t w : neighbors(v)) nb.push_back(colors[w + offset(v)]);
        std::sort(nb.begin(), nb.end());
      }
      for (std::size_t v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sig[x] < sig[y]; });
      std::size_t rank = 0;
      std::vector<std::size_t> next(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++rank;
        next[order[k]] = rank;
      }
      colors = std::move(next);
      std::size_t now = n == 0 ? 0 : rank + 1;
      if (now == classes) break;
      classes = now;
    }
    std::vector<long> balance(classes + 1, 0);
    for (std::size_t v = 0; v < n; ++v) balance[colors[v]] += v < n1_ ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
  }

  static std::size_t count_classes(const std::vector<std::size_t>& colors) {
    std::vector<std::size_t> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::optional<std::vector<std::size_t>> search(const std::vector<std::size_t>& colors) {
    const std::size_t n = colors.size();
    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t v = 0; v < n1_; ++v) ++class_size[colors[v]];
    std::optional<std::size_t> target;
    std::size_t best = kInfinity;
    for (auto [c, size] : class_size)
      if (size > 1 && size < best) {
        best = size;
        target = c;
      }
    if (!target) {
      std::vector<std::size_t> image_of_color(n, kInfinity);
      for (std::size_t w = n1_; w < n; ++w) image_of_color[colors[w]] = w - n1_;
      std::vector<std::size_t> mapping(n1_);
      for (std::size_t v = 0; v < n1_; ++v) mapping[v] = image_of_color[colors[v]];
      if (is_isomorphism(g1_, g2_, mapping)) return mapping;
      return std::nullopt;
    }
    std::size_t pick = 0;
    while (colors[pick] != *target) ++pick;
    const std::size_t fresh = *std::max_element(colors.begin(), colors.end()) + 1;
    for (std::size_t w = n1_; w < n; ++w) {
      if (colors[w] != *target) continue;
      std::vector<std::size_t> trial = colors;
      trial[pick] = fresh;
      trial[w] = fresh;
      if (!refine(trial)) continue;
      if (auto found = search(trial)) return found;
    }
    return std::nullopt;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::size_t n1_;
};

}  // namespace

IsoResult is_isomorphic(const Graph& g1, const Graph& g2, std::span<const std::size_t> colors1,
                        std::span<const std::size_t> colors2, IsoOptions options) {
  const std::size_t cap = options.max_vertices;
  if (g1.order() > cap || g2.order() > cap)
    throw LimitExceededError("isomorphism size limit exceeded (cap " + std::to_string(cap) + ")",
                             std::to_string(std::max(g1.order(), g2.order())));
  if (colors1.size() != g1.order() || colors2.size() != g2.order())
    throw PreconditionError("colour vector length must equal graph order");
  if (g1.order() != g2.order() || g1.size() != g2.size()) return {};
  std::vector<std::size_t> deg1, deg2;
  for (std::size_t v = 0; v < g1.order(); ++v) {
    deg1.push_back(g1.degree(v));
    deg2.push_back(g2.degree(v));
  }
  std::sort(deg1.begin(), deg1.end());
  std::sort(deg2.begin(), deg2.end());
  if (deg1 != deg2) return {};

  std::vector<std::size_t> colors;
  colors.reserve(g1.order() * 2);
  colors.insert(colors.end(), colors1.begin(), colors1.end());
  colors.insert(colors.end(), colors2.begin(), colors2.end());
  JointSearch search(g1, g2);
  auto mapping = search.run(std::move(colors));
  if (!mapping) return {};
  return {true, std::move(*mapping)};
}

IsoResult is_isomorphic(const Graph& g1, const Graph& g2, IsoOptions options) {
  std::vector<std::size_t> c1(g1.order(), 0), c2(g2.order(), 0);
  return is_isomorphic(g1, g2, c1, c2, options);
}

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const std::size_t> mapping) {
  if (g1.order() != g2.order() || g1.size() != g2.size() || mapping.size() != g1.order()) return false;
  std::vector<bool> hit(g2.order(), false);
  for (std::size_t v : mapping) {
    if (v >= g2.order() || hit[v]) return false;
    hit[v] = true;
  }
  // Equal edge counts plus edges-to-edges gives non-edges-to-non-edges.
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

}  // namespace spg
