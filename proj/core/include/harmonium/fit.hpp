#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmonium/enumerate.hpp"
#include "harmonium/generating_function.hpp"
#include "harmonium/quasipolynomial.hpp"

namespace harmonium {

/// Exact, deterministic m -> hbar(m) for m >= 1, plus metadata about the graph
/// it counts on.
struct CountOracle {
  std::function<BigInt(std::int64_t)> count;
  int degree = 0;
  int vertex_count = 0;
  bool connected = false;
  std::string name;
};

/// Backed by count_nowhere_harmonic.
CountOracle brute_force_oracle(const Graph& g, const EnumerationOptions& opts = {});
/// Backed by count_star.
CountOracle star_oracle(int n);

struct FitOptions {
  unsigned workers = 1;
};

struct FitReport {
  Quasipolynomial quasipolynomial;
  /// Candidates tried before the accepted period, in order.
  std::vector<std::int64_t> periods_rejected;
  std::int64_t samples_used = 0;
  bool holdout_verified = false;
  /// Every proper divisor of the accepted period was tried and rejected, so
  /// the period is the true minimal one. False means it may be a multiple.
  bool period_minimal_certified = false;
  /// samples[m - 1] == oracle(m).
  std::vector<BigInt> samples;
  int vertex_count = 0;
  bool connected = false;
  std::string name;
};

/// Divisors of lcm(1, ..., n-1) ascending, then 2*lcm, 3*lcm, ...; nothing
/// above `cap` (default 4*lcm).
std::vector<std::int64_t> default_period_candidates(int n, std::optional<std::int64_t> cap = {});

/// Least common multiple of the absolute values of all nonzero minors of the
/// Laplacian. Every vertex of every closed region in the unit cube solves a
/// system whose determinant is such a minor, so the period of hbar divides
/// this number. Requires 1 <= n <= 12.
std::int64_t laplacian_minor_lcm(const Graph& g);

/// Divisors of laplacian_minor_lcm(g) ascending, optionally capped.
std::vector<std::int64_t> minor_period_candidates(const Graph& g, std::optional<std::int64_t> cap = {});

/// For each candidate p: sample m = 1 .. p(n+3), interpolate one polynomial
/// per residue class from its first n+1 samples and accept p iff the next two
/// samples of every class match. Throws FitError when every candidate is
/// rejected, or when a connected graph yields a constituent that is not of
/// degree n with leading coefficient 1.
FitReport fit_quasipolynomial(const CountOracle& oracle, int degree,
                              std::span<const std::int64_t> period_candidates,
                              const FitOptions& options = {});

/// (-1)^n * f(-m). Throws FitError on a non-integer value.
Rational evaluate_negative(const FitReport& report, std::int64_t m);

/// sum_{m>=1} f(m) z^m over (1 - z^p)^(n+1), using the fitted period.
RationalGeneratingFunction unreduced_generating_function(const FitReport& report);

/// Structural facts every fit of a connected graph must show.
struct StructureCheck {
  bool degree_exact = false;     // every constituent has degree n
  bool leading_one = false;      // ... with leading coefficient 1
  Rational value_at_minus_one;   // (-1)^n f(-1)
  BigInt region_count;           // 2^n - 2
  bool regions_match = false;    // value_at_minus_one == region_count

  bool ok() const { return degree_exact && leading_one && regions_match; }
};

StructureCheck check_structure(const FitReport& report);

/// Numerator vanishes below z^2 and has only even integer coefficients.
bool divisible_by_two_z_squared(const Polynomial& numerator);

}  // namespace harmonium
