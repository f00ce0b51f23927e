#pragma once

#include <cstdint>
#include <string_view>

#include "harmonium/rational.hpp"

namespace harmonium {

/// Upper bound on the number of configurations a single brute-force call may
/// visit (colorings, lattice points or edge orientations).
struct Budget {
  static constexpr std::uint64_t kDefaultLimit = 1'000'000'000;
  static constexpr std::string_view kEnvironmentVariable = "HARMONIUM_BUDGET";

  std::uint64_t limit = kDefaultLimit;

  /// Default limit, overridden by HARMONIUM_BUDGET when it holds a positive integer.
  static Budget from_environment();

  /// Throws ResourceLimitError("instance too large for brute force ...")
  /// when `work` exceeds the limit.
  void require(const BigInt& work, std::string_view what) const;
};

}  // namespace harmonium
