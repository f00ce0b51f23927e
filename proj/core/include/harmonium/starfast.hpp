#pragma once

#include <cstdint>

#include "harmonium/rational.hpp"

namespace harmonium {

/// Number of (n-1)-tuples of leaf labels from {1..m} \ {center_label} whose
/// sum equals (n-1) * center_label, i.e. the leaf labellings that leave the
/// centre of the star K_{1,n-1} harmonic. Computed by dynamic programming
/// over partial sums.
BigInt leaf_sum_count(int n, std::int64_t m, std::int64_t center_label);

/// Nowhere-harmonic m-colorings of the star on n vertices (centre = vertex 1).
/// Leaves only need a label different from the centre, so the count is
/// sum_a [(m-1)^(n-1) - leaf_sum_count(n, m, a)]. Requires n >= 2, m >= 1.
BigInt count_star(int n, std::int64_t m);

}  // namespace harmonium
