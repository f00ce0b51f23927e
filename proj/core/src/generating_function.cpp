#include "harmonium/generating_function.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "harmonium/error.hpp"

namespace harmonium {

namespace {

// c(z) <- c(z) * (1 - z^k), keeping every coefficient.
void multiply_one_minus_power(std::vector<Rational>& c, std::size_t k) {
  c.resize(c.size() + k);
  for (std::size_t i = c.size(); i-- > k;) c[i] -= c[i - k];
}

// Same, truncated to the current length (power-series arithmetic).
void multiply_one_minus_power_truncated(std::vector<Rational>& c, std::size_t k) {
  for (std::size_t i = c.size(); i-- > k;) c[i] -= c[i - k];
}

// c(z) <- c(z) / (1 - z^k) as a truncated power series.
void divide_one_minus_power_truncated(std::vector<Rational>& c, std::size_t k) {
  for (std::size_t i = k; i < c.size(); ++i) c[i] += c[i - k];
}

std::vector<std::int64_t> divisors_descending(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t k = n; k >= 1; --k) {
    if (n % k == 0) d.push_back(k);
  }
  return d;
}

}  // namespace

RationalGeneratingFunction::RationalGeneratingFunction(Polynomial numerator,
                                                       std::vector<DenominatorFactor> factors,
                                                       Polynomial leftover)
    : numerator_(std::move(numerator)), leftover_(std::move(leftover)) {
  if (leftover_.is_zero()) throw DomainError("generating function with zero denominator");
  std::map<std::int64_t, int> merged;
  for (const auto& f : factors) {
    if (f.k < 1 || f.exponent < 0) throw DomainError("denominator factor needs k >= 1, e >= 0");
    if (f.exponent > 0) merged[f.k] += f.exponent;
  }
  for (const auto& [k, e] : merged) factors_.push_back({k, e});
}

bool RationalGeneratingFunction::has_leftover() const {
  return !(leftover_ == Polynomial::constant(1));
}

Polynomial RationalGeneratingFunction::expanded_denominator() const {
  std::vector<Rational> c = leftover_.coefficients();
  for (const auto& f : factors_) {
    for (int i = 0; i < f.exponent; ++i) multiply_one_minus_power(c, static_cast<std::size_t>(f.k));
  }
  return Polynomial(std::move(c));
}

std::vector<Rational> RationalGeneratingFunction::series(std::size_t terms) const {
  std::vector<Rational> s(terms);
  for (std::size_t i = 0; i < terms && i < numerator_.coefficients().size(); ++i) {
    s[i] = numerator_.coefficients()[i];
  }
  for (const auto& f : factors_) {
    for (int i = 0; i < f.exponent; ++i) divide_one_minus_power_truncated(s, static_cast<std::size_t>(f.k));
  }
  if (has_leftover()) {
    const auto& d = leftover_.coefficients();
    if (d.empty() || d[0] == 0) throw DomainError("leftover denominator has no power-series inverse");
    for (std::size_t i = 0; i < terms; ++i) {
      for (std::size_t j = 1; j < d.size() && j <= i; ++j) s[i] -= d[j] * s[i - j];
      s[i] /= d[0];
    }
  }
  return s;
}

bool series_equal(const RationalGeneratingFunction& a, const RationalGeneratingFunction& b) {
  return a.numerator() * b.expanded_denominator() == b.numerator() * a.expanded_denominator();
}

bool operator==(const RationalGeneratingFunction& a, const RationalGeneratingFunction& b) {
  return series_equal(a, b);
}

RationalGeneratingFunction gf_from_counts(std::span<const BigInt> counts, std::int64_t period,
                                          int degree) {
  if (period < 1 || degree < 0) throw DomainError("period must be positive and degree nonnegative");
  const auto p = static_cast<std::size_t>(period);
  const std::size_t exponent = static_cast<std::size_t>(degree) + 1;
  const std::size_t n_terms = counts.size();
  if (n_terms < p * exponent) {
    throw DomainError("gf_from_counts needs at least period*(degree+1) counts");
  }

  std::vector<Rational> c(n_terms + 1);
  for (std::size_t m = 1; m <= n_terms; ++m) c[m] = counts[m - 1];
  for (std::size_t i = 0; i < exponent; ++i) multiply_one_minus_power_truncated(c, p);

  const std::size_t numerator_bound = p * (exponent + 1);  // degrees >= this must vanish
  for (std::size_t i = numerator_bound; i <= n_terms; ++i) {
    if (c[i] != 0) throw DomainError("sequence inconsistent with claimed period/degree");
  }
  c.resize(std::min(c.size(), numerator_bound));
  return RationalGeneratingFunction(Polynomial(std::move(c)),
                                    {{period, static_cast<int>(exponent)}});
}

ReducedGeneratingFunction reduce_gf(const RationalGeneratingFunction& g) {
  if (g.numerator().is_zero()) return {RationalGeneratingFunction(), false};

  std::int64_t lcm_k = 1;
  for (const auto& f : g.denominator_factors()) lcm_k = std::lcm(lcm_k, f.k);

  Polynomial numerator = g.numerator();
  Polynomial denominator = g.expanded_denominator();

  if (!g.has_leftover()) {
    // Every irreducible factor of the denominator divides 1 - z^lcm, which
    // is squarefree; peel common factors one multiplicity layer at a time so
    // the Euclidean steps only ever involve polynomials of degree <= lcm.
    const Polynomial cyclic = Polynomial::one_minus_power(static_cast<std::size_t>(lcm_k));
    while (true) {
      Polynomial h = gcd(divide(numerator, cyclic).remainder, cyclic);
      h = gcd(denominator, h);
      if (h.degree() <= 0) break;
      numerator = exact_quotient(numerator, h);
      denominator = exact_quotient(denominator, h);
    }
  } else {
    const Polynomial h = gcd(numerator, denominator);
    numerator = exact_quotient(numerator, h);
    denominator = exact_quotient(denominator, h);
  }

  std::vector<DenominatorFactor> factors;
  for (std::int64_t k : divisors_descending(lcm_k)) {
    const Polynomial factor = Polynomial::one_minus_power(static_cast<std::size_t>(k));
    int exponent = 0;
    while (denominator.degree() >= k) {
      auto [q, r] = divide(denominator, factor);
      if (!r.is_zero()) break;
      denominator = std::move(q);
      ++exponent;
    }
    if (exponent > 0) factors.push_back({k, exponent});
  }

  if (denominator.degree() == 0) {
    numerator *= Rational(1) / denominator.leading_coefficient();
    return {RationalGeneratingFunction(std::move(numerator), std::move(factors)), false};
  }
  return {RationalGeneratingFunction(std::move(numerator), std::move(factors), std::move(denominator)),
          true};
}

RationalGeneratingFunction express_over(const RationalGeneratingFunction& g, std::vector<DenominatorFactor> factors) {
  RationalGeneratingFunction target(Polynomial::constant(1), std::move(factors));
  const auto d = divide(g.numerator() * target.expanded_denominator(), g.expanded_denominator());
  if (!d.remainder.is_zero()) throw DomainError("requested denominator does not clear the generating function");
  return RationalGeneratingFunction(d.quotient, target.denominator_factors());
}

std::string to_string(const RationalGeneratingFunction& g) {
  std::ostringstream os;
  os << "(" << to_string(g.numerator(), "z") << ") / (";
  bool first = true;
  for (const auto& f : g.denominator_factors()) {
    if (!first) os << " ";
    first = false;
    os << "(1 - z";
    if (f.k > 1) os << "^" << f.k;
    os << ")";
    if (f.exponent > 1) os << "^" << f.exponent;
  }
  if (g.has_leftover()) {
    if (!first) os << " ";
    first = false;
    os << "(" << to_string(g.leftover(), "z") << ")";
  }
  if (first) os << "1";
  os << ")";
  return os.str();
}

}  // namespace harmonium
