#pragma once

// Odometer enumeration of integer boxes with incremental state updates.
// Private to the core library.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "harmonium/graph.hpp"
#include "harmonium/parallel.hpp"
#include "harmonium/rational.hpp"

namespace harmonium::detail {

/// Visits every x in {lo..hi}^n whose last coordinate lies in
/// [last_lo, last_hi]. Coordinate 0 turns fastest. The tracker sees
/// reset(x) once and then shift(v, delta) for every coordinate change, so it
/// can maintain derived quantities without recomputing them.
template <typename Tracker, typename Visit>
void walk_box(std::size_t n, int lo, int hi, int last_lo, int last_hi, Tracker& tracker,
              Visit&& visit) {
  if (n == 0 || lo > hi || last_lo > last_hi) return;
  std::vector<int> x(n, lo);
  x[n - 1] = last_lo;
  tracker.reset(x);
  while (true) {
    visit(x, tracker);
    std::size_t i = 0;
    while (true) {
      if (i == n - 1) {
        if (x[i] == last_hi) return;
        ++x[i];
        tracker.shift(i, 1);
        break;
      }
      if (x[i] < hi) {
        ++x[i];
        tracker.shift(i, 1);
        break;
      }
      tracker.shift(i, lo - x[i]);
      x[i] = lo;
      ++i;
    }
  }
}

/// Splits the last coordinate's range [lo, hi] into contiguous chunks, one
/// per task, and sums the per-chunk results. The total does not depend on
/// the worker count.
template <typename Count, typename ChunkFn>
Count sum_over_chunks(int lo, int hi, unsigned workers, ChunkFn&& chunk) {
  if (lo > hi) return Count{};
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  const std::size_t tasks = std::min<std::size_t>(width, std::max(workers, 1U));
  auto parts = parallel_map<Count>(tasks, workers, [&](std::size_t t) {
    const int a = lo + static_cast<int>(width * t / tasks);
    const int b = lo + static_cast<int>(width * (t + 1) / tasks) - 1;
    return chunk(a, b);
  });
  Count total{};
  for (const auto& p : parts) total += p;
  return total;
}

/// Maintains L*x for a graph Laplacian together with the number of zero,
/// positive and negative entries.
class DefectTracker {
 public:
  explicit DefectTracker(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    degree_.resize(n);
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      degree_[v] = g.degree(v);
      offsets_[v + 1] = offsets_[v] + g.neighbors(v).size();
      for (int w : g.neighbors(v)) neighbors_.push_back(static_cast<std::size_t>(w));
    }
    defect_.assign(n, 0);
  }

  void reset(const std::vector<int>& x) {
    zeros_ = positives_ = negatives_ = 0;
    for (std::size_t v = 0; v < defect_.size(); ++v) {
      std::int64_t d = std::int64_t{degree_[v]} * x[v];
      for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) d -= x[neighbors_[k]];
      defect_[v] = d;
      classify(d, 1);
    }
  }

  void shift(std::size_t v, int delta) {
    set(v, defect_[v] + std::int64_t{degree_[v]} * delta);
    for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
      const std::size_t w = neighbors_[k];
      set(w, defect_[w] - delta);
    }
  }

  const std::vector<std::int64_t>& defect() const noexcept { return defect_; }
  int zeros() const noexcept { return zeros_; }
  int positives() const noexcept { return positives_; }
  int negatives() const noexcept { return negatives_; }

 private:
  void classify(std::int64_t d, int step) {
    if (d == 0) {
      zeros_ += step;
    } else if (d > 0) {
      positives_ += step;
    } else {
      negatives_ += step;
    }
  }

  void set(std::size_t v, std::int64_t d) {
    classify(defect_[v], -1);
    defect_[v] = d;
    classify(d, 1);
  }

  std::vector<int> degree_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> neighbors_;
  std::vector<std::int64_t> defect_;
  int zeros_ = 0;
  int positives_ = 0;
  int negatives_ = 0;
};

/// Keeps a copy of the current point; for visitors that recompute from scratch.
class PlainTracker {
 public:
  void reset(const std::vector<int>&) {}
  void shift(std::size_t, int) {}
};

__extension__ using u128 = unsigned __int128;

inline BigInt to_big(u128 v) {
  const auto high = static_cast<std::uint64_t>(v >> 64);
  const auto low = static_cast<std::uint64_t>(v);
  BigInt h = static_cast<unsigned long>(high);
  BigInt r = h << 64;
  r += static_cast<unsigned long>(low);
  return r;
}

}  // namespace harmonium::detail
