#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harmonium/rational.hpp"

namespace harmonium {

/// Dense univariate polynomial over the rationals; coefficient i multiplies
/// x^i. The highest stored coefficient is always nonzero, so the zero
/// polynomial has no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial from_integers(std::span<const BigInt> coefficients);
  static Polynomial from_integers(std::initializer_list<long> coefficients);
  /// 1 - x^k
  static Polynomial one_minus_power(std::size_t k);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  /// Zero for indices past the degree.
  Rational coefficient(std::size_t i) const;
  const Rational& leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  Rational operator()(std::int64_t x) const;

  Polynomial monic() const;
  bool has_integer_coefficients() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws DomainError on a zero divisor.
PolynomialDivision divide(const Polynomial& dividend, const Polynomial& divisor);

/// Quotient of an exact division; throws DomainError when a remainder is left.
Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

struct InterpolationNode {
  std::int64_t argument;
  Rational value;
};

/// Unique polynomial of degree < nodes.size() through every node, in exact
/// arithmetic. Throws DomainError("degenerate interpolation nodes") on a
/// repeated argument.
Polynomial interpolate(std::span<const InterpolationNode> nodes);

/// Human-readable form, highest degree first, e.g. "m^2 - m".
std::string to_string(const Polynomial& p, std::string_view variable = "m");

}  // namespace harmonium
