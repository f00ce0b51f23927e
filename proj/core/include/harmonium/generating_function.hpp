#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harmonium/polynomial.hpp"

namespace harmonium {

/// (1 - z^k)^exponent
struct DenominatorFactor {
  std::int64_t k;
  int exponent;

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// numerator(z) / (leftover(z) * prod (1 - z^k)^e).
///
/// The leftover polynomial is 1 except when reduce_gf could not express a
/// reduced denominator through (1 - z^k) factors alone. Two values compare
/// equal when they are the same rational function (cross-multiplication),
/// regardless of how they are written.
class RationalGeneratingFunction {
 public:
  RationalGeneratingFunction() = default;
  RationalGeneratingFunction(Polynomial numerator, std::vector<DenominatorFactor> factors,
                             Polynomial leftover = Polynomial::constant(1));

  const Polynomial& numerator() const noexcept { return numerator_; }
  const std::vector<DenominatorFactor>& denominator_factors() const noexcept { return factors_; }
  const Polynomial& leftover() const noexcept { return leftover_; }
  /// True when the denominator carries a leftover factor other than 1.
  bool has_leftover() const;

  Polynomial expanded_denominator() const;

  /// Power-series coefficients of z^0 .. z^(terms-1).
  std::vector<Rational> series(std::size_t terms) const;

  friend bool operator==(const RationalGeneratingFunction& a, const RationalGeneratingFunction& b);

 private:
  Polynomial numerator_;
  std::vector<DenominatorFactor> factors_;
  Polynomial leftover_ = Polynomial::constant(1);
};

/// Same rational function, decided by numerator_a * den_b == numerator_b * den_a.
bool series_equal(const RationalGeneratingFunction& a, const RationalGeneratingFunction& b);

/// Given a_1..a_N (counts[0] is a_1), returns sum a_m z^m written over
/// (1 - z^period)^(degree + 1). Throws DomainError("sequence inconsistent
/// with claimed period/degree") if the convolved numerator does not vanish
/// past degree period*(degree+2) - 1.
RationalGeneratingFunction gf_from_counts(std::span<const BigInt> counts, std::int64_t period,
                                          int degree);

struct ReducedGeneratingFunction {
  RationalGeneratingFunction value;
  /// Set when the reduced denominator is not a product of (1 - z^k) factors.
  bool warning = false;
};

/// Cancels the exact polynomial gcd of numerator and denominator, then
/// rewrites the remaining denominator greedily as (1 - z^k) factors with k
/// descending.
ReducedGeneratingFunction reduce_gf(const RationalGeneratingFunction& g);

/// The same rational function written over prod (1 - z^k)^e for the given
/// factors. Throws DomainError if that denominator is not a multiple of the
/// function's reduced denominator.
RationalGeneratingFunction express_over(const RationalGeneratingFunction& g, std::vector<DenominatorFactor> factors);

std::string to_string(const RationalGeneratingFunction& g);

}  // namespace harmonium
