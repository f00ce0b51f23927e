#include "harmonium/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "coloring_walk.hpp"
#include "harmonium/error.hpp"

namespace harmonium {

namespace {

using detail::DefectTracker;
using detail::sum_over_chunks;
using detail::walk_box;

int checked_palette(std::int64_t m, std::int64_t minimum) {
  if (m < minimum) throw DomainError("palette size must be at least " + std::to_string(minimum));
  if (m > 1'000'000) throw DomainError("palette size too large for enumeration");
  return static_cast<int>(m);
}

void require_vertices(const Graph& g) {
  if (g.vertex_count() < 1) throw DomainError("graph has no vertices");
}

void require_colorings(const Graph& g, int m, const Budget& budget, std::string_view what) {
  budget.require(power(m, static_cast<unsigned long>(g.vertex_count())), what);
}

/// Bit e of a mask means edge e is reversed against the standard orientation.
std::vector<std::uint64_t> acyclic_masks(const Graph& g, const Budget& budget) {
  const std::size_t e = g.edge_count();
  if (e > 62) throw ResourceLimitError("instance too large for brute force: more than 62 edges");
  budget.require(power(2, static_cast<unsigned long>(e)), "edge orientations");
  std::vector<std::uint64_t> masks;
  EdgeOrientation eps;
  eps.signs.resize(e);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    for (std::size_t i = 0; i < e; ++i) eps.signs[i] = (mask >> i) & 1U ? -1 : 1;
    if (is_acyclic(g, eps)) masks.push_back(mask);
  }
  return masks;
}

std::uint64_t count_compatible(const Graph& g, const std::vector<int>& x,
                               const std::vector<std::uint64_t>& masks) {
  std::uint64_t fixed = 0;
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const int diff = x[static_cast<std::size_t>(e.head - 1)] - x[static_cast<std::size_t>(e.tail - 1)];
    if (diff == 0) continue;
    fixed |= std::uint64_t{1} << i;
    if (diff < 0) value |= std::uint64_t{1} << i;
  }
  std::uint64_t count = 0;
  for (std::uint64_t a : masks) count += (a & fixed) == value;
  return count;
}

/// Adapts a full-length tracker to a walk over the first n - 1 coordinates,
/// with the last coordinate pinned at 0.
class HeldLastCoordinate {
 public:
  HeldLastCoordinate(DefectTracker& tracker, std::size_t n) : tracker_(tracker), full_(n, 0) {}

  void reset(const std::vector<int>& x) {
    std::copy(x.begin(), x.end(), full_.begin());
    tracker_.reset(full_);
  }
  void shift(std::size_t v, int delta) { tracker_.shift(v, delta); }

 private:
  DefectTracker& tracker_;
  std::vector<int> full_;
};

}  // namespace

Coloring::Coloring(std::vector<int> values, int palette) : values_(std::move(values)), palette_(palette) {
  if (palette_ < 1) throw DomainError("palette size must be positive");
  for (int v : values_) {
    if (v < 1 || v > palette_) throw DomainError("label outside 1.." + std::to_string(palette_));
  }
}

std::vector<std::int64_t> harmonic_defect(const Graph& g, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw DomainError("coloring length differs from vertex count");
  }
  std::vector<std::int64_t> defect(c.size());
  for (std::size_t v = 0; v < c.size(); ++v) {
    std::int64_t d = std::int64_t{g.degree(v)} * c[v];
    for (int w : g.neighbors(v)) d -= c[static_cast<std::size_t>(w)];
    defect[v] = d;
  }
  return defect;
}

bool is_nowhere_harmonic(const Graph& g, const Coloring& c) {
  for (std::int64_t d : harmonic_defect(g, c)) {
    if (d == 0) return false;
  }
  return true;
}

BigInt count_nowhere_harmonic(const Graph& g, std::int64_t m, const EnumerationOptions& opts) {
  require_vertices(g);
  const int palette = checked_palette(m, 1);
  require_colorings(g, palette, opts.budget, "nowhere-harmonic count");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const std::size_t last = n - 1;
  const int last_degree = g.degree(last);
  if (last_degree == 0) return 0;

  // Enumerate vertices 0..n-2 with the last label held at 0, then count the
  // admissible last labels directly: each neighbour v of the last vertex
  // forbids exactly one label (the one making v harmonic), and the last
  // vertex itself forbids the average of its neighbours when integral.
  std::vector<bool> adjacent(n, false);
  for (int w : g.neighbors(last)) adjacent[static_cast<std::size_t>(w)] = true;
  const auto total = sum_over_chunks<std::uint64_t>(1, palette, opts.workers, [&](int a, int b) {
    DefectTracker tracker(g);
    HeldLastCoordinate held(tracker, n);
    std::uint64_t count = 0;
    std::vector<std::int64_t> forbidden;
    forbidden.reserve(static_cast<std::size_t>(last_degree) + 1);
    walk_box(n - 1, 1, palette, a, b, held, [&](const std::vector<int>&, const HeldLastCoordinate&) {
      const auto& d = tracker.defect();
      forbidden.clear();
      for (std::size_t v = 0; v < last; ++v) {
        if (!adjacent[v]) {
          if (d[v] == 0) return;
        } else if (d[v] >= 1 && d[v] <= palette) {
          forbidden.push_back(d[v]);
        }
      }
      // d[last] = -(sum of neighbour labels) while the last label is 0.
      if (-d[last] % last_degree == 0) {
        const std::int64_t mean = -d[last] / last_degree;
        if (mean >= 1 && mean <= palette) forbidden.push_back(mean);
      }
      std::sort(forbidden.begin(), forbidden.end());
      const auto distinct = std::unique(forbidden.begin(), forbidden.end()) - forbidden.begin();
      count += static_cast<std::uint64_t>(palette - distinct);
    });
    return count;
  });
  return BigInt(static_cast<unsigned long>(total));
}

BigInt beta(const Graph& g, const Coloring& c) {
  if (g.has_isolated_vertex()) throw DomainError("compatibility undefined at an isolated vertex");
  int zeros = 0;
  bool subharmonic_everywhere = true;
  bool superharmonic_everywhere = true;
  for (std::int64_t d : harmonic_defect(g, c)) {
    if (d == 0) ++zeros;
    if (d > 0) subharmonic_everywhere = false;
    if (d < 0) superharmonic_everywhere = false;
  }
  BigInt result = power(2, static_cast<unsigned long>(zeros));
  if (subharmonic_everywhere) result -= 1;
  if (superharmonic_everywhere) result -= 1;
  return result;
}

BigInt reciprocity_rhs(const Graph& g, std::int64_t m, const EnumerationOptions& opts) {
  if (!g.is_connected() || g.has_isolated_vertex()) {
    throw DomainError("reciprocity sum needs a connected graph with at least one edge");
  }
  const int palette = checked_palette(m, 1);
  require_colorings(g, palette, opts.budget, "reciprocity sum");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n > 62) throw DomainError("too many vertices");
  using detail::u128;
  const u128 total = sum_over_chunks<u128>(1, palette, opts.workers, [&](int a, int b) {
    DefectTracker tracker(g);
    u128 sum = 0;
    walk_box(n, 1, palette, a, b, tracker, [&](const std::vector<int>&, const DefectTracker& t) {
      sum += (u128{1} << t.zeros()) - (t.positives() == 0) - (t.negatives() == 0);
    });
    return sum;
  });
  return detail::to_big(total);
}

BigInt chromatic_count(const Graph& g, std::int64_t m, const EnumerationOptions& opts) {
  require_vertices(g);
  const int palette = checked_palette(m, 0);
  if (palette == 0) return 0;
  require_colorings(g, palette, opts.budget, "proper coloring count");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto total = sum_over_chunks<std::uint64_t>(1, palette, opts.workers, [&](int a, int b) {
    detail::PlainTracker tracker;
    std::uint64_t count = 0;
    walk_box(n, 1, palette, a, b, tracker, [&](const std::vector<int>& x, const detail::PlainTracker&) {
      for (const Edge& e : g.edges()) {
        if (x[static_cast<std::size_t>(e.tail - 1)] == x[static_cast<std::size_t>(e.head - 1)]) return;
      }
      ++count;
    });
    return count;
  });
  return BigInt(static_cast<unsigned long>(total));
}

Polynomial chromatic_polynomial(const Graph& g, const EnumerationOptions& opts) {
  std::vector<InterpolationNode> nodes;
  for (int m = 0; m <= g.vertex_count(); ++m) nodes.push_back({m, Rational(chromatic_count(g, m, opts))});
  return interpolate(nodes);
}

bool is_acyclic(const Graph& g, const EdgeOrientation& eps) {
  if (eps.signs.size() != g.edge_count()) throw DomainError("orientation length differs from edge count");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    int from = g.edges()[i].tail - 1;
    int to = g.edges()[i].head - 1;
    if (eps.signs[i] < 0) std::swap(from, to);
    out[static_cast<std::size_t>(from)].push_back(to);
    ++indegree[static_cast<std::size_t>(to)];
  }
  // Kahn: the orientation is acyclic iff every vertex can be removed.
  std::queue<int> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<int>(v));
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop();
    ++removed;
    for (int w : out[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  return removed == n;
}

BigInt count_acyclic_orientations(const Graph& g, const EnumerationOptions& opts) {
  return BigInt(static_cast<unsigned long>(acyclic_masks(g, opts.budget).size()));
}

BigInt alpha(const Graph& g, const Coloring& c, const EnumerationOptions& opts) {
  if (c.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw DomainError("coloring length differs from vertex count");
  }
  return BigInt(static_cast<unsigned long>(count_compatible(g, c.values(), acyclic_masks(g, opts.budget))));
}

BigInt acyclic_reciprocity_rhs(const Graph& g, std::int64_t m, const EnumerationOptions& opts) {
  require_vertices(g);
  const int palette = checked_palette(m, 1);
  require_colorings(g, palette, opts.budget, "acyclic reciprocity sum");
  const auto masks = acyclic_masks(g, opts.budget);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto total = sum_over_chunks<std::uint64_t>(1, palette, opts.workers, [&](int a, int b) {
    detail::PlainTracker tracker;
    std::uint64_t sum = 0;
    walk_box(n, 1, palette, a, b, tracker, [&](const std::vector<int>& x, const detail::PlainTracker&) {
      sum += count_compatible(g, x, masks);
    });
    return sum;
  });
  return BigInt(static_cast<unsigned long>(total));
}

Coloring construct_two_coloring(const Graph& g) {
  require_vertices(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, 0);
  for (const auto& component : g.components()) {
    if (component.size() < 2) throw DomainError("no nowhere-harmonic coloring exists (isolated vertex)");
    const auto root = static_cast<std::size_t>(component.front());
    label[root] = 1;
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        auto& lw = label[static_cast<std::size_t>(w)];
        if (lw != 0) continue;
        lw = 3 - label[v];
        frontier.push(static_cast<std::size_t>(w));
      }
    }
  }
  Coloring c(std::move(label), 2);
  if (!is_nowhere_harmonic(g, c)) throw std::logic_error("two-coloring construction left a harmonic vertex");
  return c;
}

Coloring involute(const Coloring& c) {
  std::vector<int> values(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) values[i] = c.palette() + 1 - c[i];
  return Coloring(std::move(values), c.palette());
}

}  // namespace harmonium
