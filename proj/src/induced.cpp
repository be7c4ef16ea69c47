#include "spg/induced.hpp"

#include <algorithm>

#include "spg/error.hpp"

namespace spg {

std::string Pattern::name() const {
  switch (kind) {
    case PatternKind::P3:
      return "P3";
    case PatternKind::Claw:
      return "claw";
    case PatternKind::Cycle:
      return "C" + std::to_string(length);
  }
  return "?";
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, const std::function<bool(std::span<const std::size_t>)>& visit,
             SearchLimits limits)
      : g_(g), visit_(visit), limits_(limits) {}

  void p3() {
    for (std::size_t x = 0; x < g_.order() && !stopped_; ++x)
      for (std::size_t m : g_.neighbors(x))
        for (std::size_t y : g_.neighbors(m)) {
          tick();
          if (y <= x || g_.adjacent(x, y)) continue;
          if (!emit({x, m, y})) return;
        }
  }

  void claw() {
    for (std::size_t c = 0; c < g_.order(); ++c) {
      auto nb = g_.neighbors(c);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          tick();
          if (g_.adjacent(nb[i], nb[j])) continue;
          for (std::size_t k = j + 1; k < nb.size(); ++k) {
            tick();
            if (g_.adjacent(nb[i], nb[k]) || g_.adjacent(nb[j], nb[k])) continue;
            if (!emit({c, nb[i], nb[j], nb[k]})) return;
          }
        }
    }
  }

  void cycle(std::size_t k) {
    if (k < 3) throw PreconditionError("cycle pattern needs length >= 3");
    path_.assign(1, 0);
    on_path_.assign(g_.order(), false);
    for (std::size_t s = 0; s < g_.order() && !stopped_; ++s) {
      path_[0] = s;
      on_path_[s] = true;
      extend(k);
      on_path_[s] = false;
    }
  }

 private:
  void tick() {
    if (++work_ > limits_.max_work)
      throw LimitExceededError("induced-subgraph search exceeded work limit " +
                                   std::to_string(limits_.max_work),
                               std::to_string(work_));
  }

  bool emit(std::vector<std::size_t> tuple) {
    if (!visit_(tuple)) stopped_ = true;
    return !stopped_;
  }

  void extend(std::size_t k) {
    const std::size_t t = path_.size();  // position being filled
    const std::size_t root = path_[0];
    const bool last = t + 1 == k;
    for (std::size_t w : g_.neighbors(path_.back())) {
      if (stopped_) return;
      tick();
      if (w <= root || on_path_[w]) continue;
      if (last && w <= path_[1]) continue;
      bool ok = true;
      if (t >= 2) {
        if (g_.adjacent(w, root) != last) ok = false;
        for (std::size_t q = 1; ok && q + 1 < t; ++q)
          if (g_.adjacent(w, path_[q])) ok = false;
      }
      if (!ok) continue;
      path_.push_back(w);
      if (last) {
        emit(path_);
      } else {
        on_path_[w] = true;
        extend(k);
        on_path_[w] = false;
      }
      path_.pop_back();
    }
  }

  const Graph& g_;
  const std::function<bool(std::span<const std::size_t>)>& visit_;
  SearchLimits limits_;
  std::uint64_t work_ = 0;
  bool stopped_ = false;
  std::vector<std::size_t> path_;
  std::vector<bool> on_path_;
};

}  // namespace

void for_each_induced(const Graph& g, Pattern pattern,
                      const std::function<bool(std::span<const std::size_t>)>& visit,
                      SearchLimits limits) {
  if (pattern.order() > g.order()) return;
  Enumerator e(g, visit, limits);
  switch (pattern.kind) {
    case PatternKind::P3:
      e.p3();
      break;
    case PatternKind::Claw:
      e.claw();
      break;
    case PatternKind::Cycle:
      e.cycle(pattern.length);
      break;
  }
}

std::vector<Occurrence> find_induced(const Graph& g, Pattern pattern, SearchLimits limits) {
  std::vector<Occurrence> out;
  for_each_induced(
      g, pattern,
      [&](std::span<const std::size_t> t) {
        out.emplace_back(t.begin(), t.end());
        return true;
      },
      limits);
  return out;
}

bool contains_induced(const Graph& g, Pattern pattern, SearchLimits limits) {
  bool found = false;
  for_each_induced(
      g, pattern,
      [&](std::span<const std::size_t>) {
        found = true;
        return false;
      },
      limits);
  return found;
}

bool is_induced_occurrence(const Graph& g, Pattern pattern, std::span<const std::size_t> t) {
  if (t.size() != pattern.order()) return false;
  for (std::size_t v : t)
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j]) return false;
  auto should_be_adjacent = [&](std::size_t i, std::size_t j) {
    switch (pattern.kind) {
      case PatternKind::P3:
        return i == 1 || j == 1;
      case PatternKind::Claw:
        return i == 0 || j == 0;
      case PatternKind::Cycle:
        return j == i + 1 || (i == 0 && j + 1 == t.size());
    }
    return false;
  };
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (g.adjacent(t[i], t[j]) != should_be_adjacent(i, j)) return false;
  return true;
}

}  // namespace spg
