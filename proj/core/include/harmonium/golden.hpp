#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "harmonium/generating_function.hpp"
#include "harmonium/graph.hpp"

namespace harmonium {

/// Published generating function of one family member, transcribed into
/// core/data/golden_tables.json.
struct GoldenEntry {
  std::string name;  // e.g. "path_4"
  RationalGeneratingFunction reduced;
  /// Absent for n = 6, where only the unreduced denominator is published.
  std::optional<RationalGeneratingFunction> unreduced;
  DenominatorFactor unreduced_denominator{1, 1};
};

using GoldenTable = std::map<std::string, GoldenEntry>;

/// Parses the table format; throws DomainError on malformed input.
GoldenTable parse_golden_tables(std::string_view json_text);

/// The embedded table.
const GoldenTable& golden_tables();

std::string golden_key(Family f, int n);
const GoldenEntry* find_golden(Family f, int n);

}  // namespace harmonium
