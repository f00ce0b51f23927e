#include "harmonium/starfast.hpp"

#include <cmath>
#include <vector>

#include "coloring_walk.hpp"
#include "harmonium/error.hpp"

namespace harmonium {

namespace {

void check_request(int n, std::int64_t m) {
  if (n < 2) throw DomainError("star graph needs n >= 2");
  if (m < 1) throw DomainError("palette size must be at least 1");
  if (m > 100'000'000) throw DomainError("palette size too large for the star counter");
}

// Partial-sum table truncated to [0, target]; window sums come from a
// running prefix so each step is linear in the table size.
template <typename Value>
Value leaf_sum_dp(int leaves, std::int64_t m, std::int64_t a) {
  const std::int64_t target = std::int64_t{leaves} * a;
  const auto size = static_cast<std::size_t>(target + 1);
  std::vector<Value> table(size, Value(0));
  std::vector<Value> next(size, Value(0));
  std::vector<Value> prefix(size + 1, Value(0));
  table[0] = 1;

  for (int step = 1; step <= leaves; ++step) {
    for (std::size_t t = 0; t < size; ++t) prefix[t + 1] = prefix[t] + table[t];
    const std::int64_t lo = step;
    const std::int64_t hi = std::min<std::int64_t>(std::int64_t{step} * m, target);
    // Sums still able to reach the target with the remaining leaves.
    const std::int64_t need = target - std::int64_t{leaves - step} * m;
    const std::int64_t first = step == leaves ? target : std::max(lo, need);
    std::fill(next.begin(), next.end(), Value(0));
    for (std::int64_t t = first; t <= hi; ++t) {
      // sum of table[t - x] for x = 1..m, minus the forbidden label x = a
      const std::int64_t upper = t - 1;
      const std::int64_t lower = std::max<std::int64_t>(t - m, 0);
      if (upper < lower) continue;
      Value v = prefix[static_cast<std::size_t>(upper + 1)] - prefix[static_cast<std::size_t>(lower)];
      if (t - a >= 0) v -= table[static_cast<std::size_t>(t - a)];
      next[static_cast<std::size_t>(t)] = v;
    }
    std::swap(table, next);
  }
  return table[static_cast<std::size_t>(target)];
}

// Every table entry is bounded by m^leaves; stay in 128-bit words when that fits.
bool fits_in_u128(int leaves, std::int64_t m) {
  return static_cast<double>(leaves) * std::log2(static_cast<double>(m) + 1.0) < 125.0;
}

BigInt leaf_sum_count_unchecked(int leaves, std::int64_t m, std::int64_t a) {
  if (fits_in_u128(leaves, m)) return detail::to_big(leaf_sum_dp<detail::u128>(leaves, m, a));
  return leaf_sum_dp<BigInt>(leaves, m, a);
}

}  // namespace

BigInt leaf_sum_count(int n, std::int64_t m, std::int64_t center_label) {
  check_request(n, m);
  if (center_label < 1 || center_label > m) throw DomainError("centre label outside 1..m");
  return leaf_sum_count_unchecked(n - 1, m, center_label);
}

BigInt count_star(int n, std::int64_t m) {
  check_request(n, m);
  const int leaves = n - 1;
  BigInt total = BigInt(static_cast<long>(m)) * power(m - 1, static_cast<unsigned long>(leaves));
  // a -> m + 1 - a is a symmetry of the leaf-sum problem.
  for (std::int64_t a = 1; a <= m; ++a) {
    const std::int64_t mirror = m + 1 - a;
    if (mirror < a) break;
    const BigInt harmonic_centre = leaf_sum_count_unchecked(leaves, m, a);
    total -= mirror == a ? harmonic_centre : BigInt(2 * harmonic_centre);
  }
  return total;
}

}  // namespace harmonium
