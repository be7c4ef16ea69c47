#include "spg/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "spg/error.hpp"

namespace spg {

namespace {

std::string tuple_name(const std::vector<std::size_t>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::vector<std::size_t> parse_tuple(const std::string& name) {
  if (name.size() < 2 || name.front() != '(' || name.back() != ')')
    throw PreconditionError("not a grid vertex: " + name);
  std::vector<std::size_t> out;
  std::stringstream ss(name.substr(1, name.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw PreconditionError("not a grid vertex: " + name);
    out.push_back(std::stoul(part));
  }
  return out;
}

// Odometer over the box [0,n_1] x ... x [0,n_m].
bool advance(std::vector<std::size_t>& x, const std::vector<std::size_t>& dims) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] < dims[i]) {
      ++x[i];
      return true;
    }
    x[i] = 0;
  }
  return false;
}

}  // namespace

GridSpec::GridSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw PreconditionError("grid needs at least one dimension");
  for (std::size_t n : dims_)
    if (n == 0) throw PreconditionError("grid dimensions must be positive");
}

std::size_t GridSpec::moves() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

std::size_t GridSpec::lattice_dimension() const { return spg::lattice_dimension(dims_); }

std::size_t lattice_dimension(const std::vector<std::size_t>& dims) {
  std::size_t m = 0;
  for (std::size_t i = 1; i < dims.size(); ++i) m += i * dims[i];
  return m;
}

BigInt GridSpec::sequence_count() const {
  BigInt count = 1;
  std::size_t placed = 0;
  // Product of binomials C(n_1+...+n_i, n_i).
  for (std::size_t n : dims_) {
    for (std::size_t t = 1; t <= n; ++t) {
      count *= placed + t;
      count /= t;
    }
    placed += n;
  }
  return count;
}

MoveSequence::MoveSequence(GridSpec spec, std::vector<std::size_t> symbols)
    : spec_(std::move(spec)), symbols_(std::move(symbols)) {
  std::vector<std::size_t> seen(spec_.dimension() + 1, 0);
  for (std::size_t s : symbols_) {
    if (s < 1 || s > spec_.dimension())
      throw PreconditionError("move symbol " + std::to_string(s) + " outside 1.." +
                              std::to_string(spec_.dimension()));
    ++seen[s];
  }
  for (std::size_t i = 1; i <= spec_.dimension(); ++i)
    if (seen[i] != spec_.dims()[i - 1])
      throw PreconditionError("symbol " + std::to_string(i) + " occurs " + std::to_string(seen[i]) +
                              " times, expected " + std::to_string(spec_.dims()[i - 1]));
}

MoveSequence MoveSequence::parse(const GridSpec& spec, const std::string& text) {
  std::vector<std::size_t> symbols;
  if (text.find(',') == std::string::npos && spec.dimension() <= 9) {
    for (char c : text) {
      if (c < '0' || c > '9') throw PreconditionError("bad move symbol '" + std::string(1, c) + "'");
      symbols.push_back(static_cast<std::size_t>(c - '0'));
    }
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw PreconditionError("bad move symbol '" + part + "'");
      symbols.push_back(std::stoul(part));
    }
  }
  return MoveSequence(spec, std::move(symbols));
}

std::string MoveSequence::to_string() const {
  std::string out;
  const bool digits = spec_.dimension() <= 9;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (!digits && k) out += ',';
    out += std::to_string(symbols_[k]);
  }
  return out;
}

LatticePoint::LatticePoint(GridSpec spec, std::vector<long> coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
  if (coords_.size() != spec_.lattice_dimension())
    throw PreconditionError("lattice point needs " + std::to_string(spec_.lattice_dimension()) +
                            " coordinates, got " + std::to_string(coords_.size()));
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t LatticePoint::offset(const GridSpec& spec, std::size_t i, std::size_t j, std::size_t k) {
  const auto& n = spec.dims();
  std::size_t off = 0;
  for (std::size_t jj = 2; jj < j; ++jj) off += (jj - 1) * n[jj - 1];
  return off + (i - 1) * n[j - 1] + (k - 1);
}

std::vector<std::size_t> grid_vertex_coordinates(const Vertex& name) { return parse_tuple(name); }

BaseInstance grid_base(const GridSpec& spec) {
  const auto& dims = spec.dims();
  std::vector<Vertex> names;
  std::vector<VertexPair> edges;
  std::vector<std::size_t> x(dims.size(), 0);
  do {
    names.push_back(tuple_name(x));
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (x[i] < dims[i]) {
        auto y = x;
        ++y[i];
        edges.emplace_back(tuple_name(x), tuple_name(y));
      }
  } while (advance(x, dims));
  return BaseInstance(Graph::from_edges(std::move(names), edges), tuple_name(std::vector<std::size_t>(dims.size(), 0)),
                      tuple_name(dims));
}

MoveSequence encode_path(const GridSpec& spec, const std::vector<Vertex>& path) {
  if (path.size() != spec.moves() + 1)
    throw PreconditionError("grid geodesic must have " + std::to_string(spec.moves() + 1) + " vertices");
  std::vector<std::size_t> symbols;
  auto prev = parse_tuple(path.front());
  if (prev != std::vector<std::size_t>(spec.dimension(), 0))
    throw PreconditionError("grid geodesic must start at the origin");
  for (std::size_t t = 1; t < path.size(); ++t) {
    auto cur = parse_tuple(path[t]);
    if (cur.size() != prev.size()) throw PreconditionError("mixed grid dimensions in path");
    std::size_t moved = 0, dir = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == prev[i]) continue;
      if (cur[i] != prev[i] + 1) throw PreconditionError("step is not a forward unit move: " + path[t]);
      ++moved;
      dir = i + 1;
    }
    if (moved != 1) throw PreconditionError("step is not a unit move: " + path[t]);
    symbols.push_back(dir);
    prev = std::move(cur);
  }
  return MoveSequence(spec, std::move(symbols));
}

std::vector<Vertex> decode_path(const MoveSequence& word) {
  std::vector<std::size_t> x(word.spec().dimension(), 0);
  std::vector<Vertex> out{tuple_name(x)};
  for (std::size_t s : word.symbols()) {
    ++x[s - 1];
    out.push_back(tuple_name(x));
  }
  return out;
}

std::vector<MoveSequence> enumerate_sequences(const GridSpec& spec, std::size_t limit) {
  BigInt total = spec.sequence_count();
  if (total > limit)
    throw LimitExceededError("sequence count " + total.str() + " exceeds limit " + std::to_string(limit),
                             total.str());
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < spec.dimension(); ++i) word.insert(word.end(), spec.dims()[i], i + 1);
  std::vector<MoveSequence> out;
  out.reserve(static_cast<std::size_t>(total));
  do {
    out.emplace_back(spec, word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

bool sequences_adjacent(const MoveSequence& u, const MoveSequence& w) {
  if (!(u.spec() == w.spec())) return false;
  const auto& p = u.symbols();
  const auto& q = w.symbols();
  std::size_t first = kInfinity, count = 0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != q[k]) {
      if (first == kInfinity) first = k;
      ++count;
    }
  return count == 2 && first + 1 < p.size() && p[first] == q[first + 1] && p[first + 1] == q[first] &&
         p[first] != p[first + 1];
}

LatticePoint phi(const MoveSequence& word) {
  const GridSpec& spec = word.spec();
  const auto& s = word.symbols();
  const std::size_t m = spec.dimension();
  std::vector<long> coords(spec.lattice_dimension(), 0);
  std::vector<std::size_t> occurrence(s.size());
  std::vector<std::size_t> seen(m + 1, 0);
  for (std::size_t p = 0; p < s.size(); ++p) occurrence[p] = ++seen[s[p]];
  std::vector<long> after(m + 1, 0);  // symbol counts to the right of p
  for (std::size_t p = s.size(); p-- > 0;) {
    const std::size_t j = s[p];
    for (std::size_t i = 1; i < j; ++i) coords[LatticePoint::offset(spec, i, j, occurrence[p])] = after[i];
    ++after[j];
  }
  return LatticePoint(spec, std::move(coords));
}

bool satisfies_image_bounds(const LatticePoint& point) {
  const GridSpec& spec = point.spec();
  const auto& n = spec.dims();
  const auto& a = point.coords();
  for (std::size_t j = 2; j <= spec.dimension(); ++j)
    for (std::size_t i = 1; i < j; ++i)
      for (std::size_t k = 1; k <= n[j - 1]; ++k) {
        long v = a[LatticePoint::offset(spec, i, j, k)];
        if (v < 0 || v > static_cast<long>(n[i - 1])) return false;
        if (k < n[j - 1] && v < a[LatticePoint::offset(spec, i, j, k + 1)]) return false;
      }
  return true;
}

MoveSequence phi_inverse(const LatticePoint& point) {
  const GridSpec& spec = point.spec();
  const auto& n = spec.dims();
  const std::size_t m = spec.dimension();
  if (!satisfies_image_bounds(point))
    throw PreconditionError("point " + point.to_string() + " violates the image bounds");
  auto a = [&](std::size_t i, std::size_t j, std::size_t k) {
    return point.coords()[LatticePoint::offset(spec, i, j, k)];
  };
  std::vector<std::size_t> remaining(n.begin(), n.end());
  remaining.insert(remaining.begin(), 0);  // 1-based
  std::vector<std::size_t> word(spec.moves());
  // Fill right to left: the next symbol is the unique j whose last remaining
  // occurrence is preceded by every other remaining symbol.
  for (std::size_t pos = word.size(); pos-- > 0;) {
    std::size_t chosen = 0;
    for (std::size_t j = 1; j <= m && chosen == 0; ++j) {
      if (remaining[j] == 0) continue;
      bool ok = true;
      for (std::size_t i = 1; i < j && ok; ++i)
        ok = a(i, j, remaining[j]) == static_cast<long>(n[i - 1] - remaining[i]);
      for (std::size_t l = j + 1; l <= m && ok; ++l)
        if (remaining[l] > 0) ok = a(j, l, remaining[l]) >= static_cast<long>(n[j - 1] - remaining[j] + 1);
      if (ok) chosen = j;
    }
    if (chosen == 0) throw PreconditionError("point " + point.to_string() + " is not in the image of phi");
    word[pos] = chosen;
    --remaining[chosen];
  }
  MoveSequence result(spec, std::move(word));
  if (!(phi(result) == point))
    throw PreconditionError("point " + point.to_string() + " is not in the image of phi");
  return result;
}

bool lattice_adjacent(const LatticePoint& p, const LatticePoint& q) {
  if (!(p.spec() == q.spec())) return false;
  std::size_t diff = 0;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    long delta = p.coords()[i] - q.coords()[i];
    if (delta == 0) continue;
    if (delta != 1 && delta != -1) return false;
    ++diff;
  }
  return diff == 1;
}

Graph staircase(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw PreconditionError("staircase needs n1, n2 >= 1");
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::size_t> x(n2, 0);
  std::vector<std::size_t> box(n2, n1);
  do {
    if (std::is_sorted(x.rbegin(), x.rend())) points.push_back(x);
  } while (advance(x, box));
  std::vector<Vertex> names;
  std::vector<VertexPair> edges;
  for (const auto& p : points) {
    names.push_back(tuple_name(p));
    for (std::size_t i = 0; i < n2; ++i) {
      auto q = p;
      ++q[i];
      if (q[i] <= n1 && std::is_sorted(q.rbegin(), q.rend())) edges.emplace_back(tuple_name(p), tuple_name(q));
    }
  }
  return Graph::from_edges(std::move(names), edges);
}

Graph cayley_adjacent_transpositions(std::size_t m, std::size_t limit) {
  if (m < 1) throw PreconditionError("symmetric group needs m >= 1");
  BigInt total = 1;
  for (std::size_t t = 2; t <= m; ++t) total *= t;
  if (total > limit)
    throw LimitExceededError("m! = " + total.str() + " exceeds limit " + std::to_string(limit), total.str());
  const GridSpec cube(std::vector<std::size_t>(m, 1));
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Vertex> names;
  std::vector<VertexPair> edges;
  do {
    const Vertex name = MoveSequence(cube, perm).to_string();
    names.push_back(name);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      auto swapped = perm;
      std::swap(swapped[i], swapped[i + 1]);
      if (perm < swapped) edges.emplace_back(name, MoveSequence(cube, swapped).to_string());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Graph::from_edges(std::move(names), edges);
}

namespace {

std::size_t pair_offset(std::size_t i, std::size_t j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

}  // namespace

TransitiveTournament::TransitiveTournament(std::size_t m, std::vector<bool> reversed)
    : m_(m), reversed_(std::move(reversed)) {
  if (reversed_.size() != m_ * (m_ - (m_ > 0 ? 1 : 0)) / 2)
    throw PreconditionError("tournament needs one bit per pair");
  // i -> j -> k -> i (or its reverse) for some triple means not transitive.
  for (std::size_t i = 1; i <= m_; ++i)
    for (std::size_t j = i + 1; j <= m_; ++j)
      for (std::size_t k = j + 1; k <= m_; ++k) {
        bool ij = forward(i, j), jk = forward(j, k), ik = forward(i, k);
        if ((ij && jk && !ik) || (!ij && !jk && ik))
          throw PreconditionError("orientation contains a directed 3-cycle on " + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k));
      }
}

bool TransitiveTournament::forward(std::size_t i, std::size_t j) const {
  return !reversed_[pair_offset(i, j)];
}

TransitiveTournament tournament_of(const MoveSequence& word) {
  const GridSpec& spec = word.spec();
  for (std::size_t n : spec.dims())
    if (n != 1) throw PreconditionError("tournaments are defined for hypercube words only");
  LatticePoint p = phi(word);
  std::vector<bool> bits;
  for (long v : p.coords()) bits.push_back(v == 1);
  return TransitiveTournament(spec.dimension(), std::move(bits));
}

}  // namespace spg
