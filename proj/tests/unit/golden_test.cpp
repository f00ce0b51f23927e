#include <gtest/gtest.h>

#include <cmath>

#include "harmonium/enumerate.hpp"
#include "harmonium/error.hpp"
#include "harmonium/golden.hpp"
#include "harmonium/starfast.hpp"

namespace harmonium {
namespace {

struct Key {
  Family kind;
  int n;
};

std::vector<Key> all_keys() {
  std::vector<Key> keys;
  for (auto kind : {Family::path, Family::cycle, Family::complete, Family::star})
    for (int n = 3; n <= 6; ++n) keys.push_back({kind, n});
  return keys;
}

TEST(Golden, TableIsComplete) {
  EXPECT_EQ(golden_tables().size(), 16u);
  for (auto [kind, n] : all_keys()) {
    const auto* g = find_golden(kind, n);
    ASSERT_NE(g, nullptr) << golden_key(kind, n);
    EXPECT_EQ(g->unreduced_denominator.exponent, n + 1);
  }
  EXPECT_EQ(find_golden(Family::path, 9), nullptr);
  EXPECT_EQ(find_golden(Family::star, 6)->unreduced_denominator, (DenominatorFactor{60, 7}));
}

TEST(Golden, ReducedAndUnreducedFormsAgree) {
  for (auto [kind, n] : all_keys()) {
    const auto* g = find_golden(kind, n);
    if (!g->unreduced) continue;
    EXPECT_EQ(*g->unreduced, g->reduced) << g->name;
  }
}

// Transcription guard: the leading series coefficients must be the counts.
TEST(Golden, LowOrderCoefficientsMatchCounts) {
  for (auto [kind, n] : all_keys()) {
    const auto* entry = find_golden(kind, n);
    const auto graph = family(kind, n);
    const std::int64_t brute_limit = static_cast<std::int64_t>(std::floor(std::pow(2.0e6, 1.0 / n)));
    const std::int64_t terms = kind == Family::star ? 40 : brute_limit;
    const auto series = entry->reduced.series(static_cast<std::size_t>(terms) + 1);
    EXPECT_EQ(series[0], 0) << entry->name;
    for (std::int64_t m = 1; m <= terms; ++m) {
      const BigInt expected = kind == Family::star ? count_star(n, m) : count_nowhere_harmonic(graph, m);
      EXPECT_EQ(series[m], Rational(expected)) << entry->name << " m=" << m;
    }
  }
}

TEST(Golden, ParserRejectsMalformedTables) {
  EXPECT_THROW(parse_golden_tables("{"), DomainError);
  EXPECT_THROW(parse_golden_tables(R"({"x": {"reduced": {}}})"), DomainError);
}

}  // namespace
}  // namespace harmonium
