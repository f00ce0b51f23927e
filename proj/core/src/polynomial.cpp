#include "harmonium/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "harmonium/error.hpp"

namespace harmonium {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coefficients(degree + 1);
  coefficients[degree] = c;
  return Polynomial(std::move(coefficients));
}

Polynomial Polynomial::from_integers(std::span<const BigInt> coefficients) {
  std::vector<Rational> q;
  q.reserve(coefficients.size());
  for (const auto& c : coefficients) q.emplace_back(c);
  return Polynomial(std::move(q));
}

Polynomial Polynomial::from_integers(std::initializer_list<long> coefficients) {
  std::vector<Rational> q;
  q.reserve(coefficients.size());
  for (long c : coefficients) q.emplace_back(c);
  return Polynomial(std::move(q));
}

Polynomial Polynomial::one_minus_power(std::size_t k) {
  if (k == 0) throw DomainError("1 - x^0 is identically zero");
  std::vector<Rational> c(k + 1);
  c[0] = 1;
  c[k] = -1;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

const Rational& Polynomial::leading_coefficient() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coefficients_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational Polynomial::operator()(std::int64_t x) const {
  return (*this)(Rational(BigInt(static_cast<long>(x))));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rational lead = leading_coefficient();
  for (auto& c : p.coefficients_) c /= lead;
  return p;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return is_integer(c); });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coefficients_;
  const auto& b = rhs.coefficients_;
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coefficients_) c = -c;
  return p;
}

PolynomialDivision divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial(), dividend};

  std::vector<Rational> rem = dividend.coefficients();
  std::vector<Rational> quo(rem.size() - static_cast<std::size_t>(dd));
  const auto& d = divisor.coefficients();
  const Rational lead = divisor.leading_coefficient();
  const bool unit_lead = lead == 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + static_cast<std::size_t>(dd)];
    if (q == 0) continue;
    if (!unit_lead) q /= lead;
    for (int j = 0; j <= dd; ++j) {
      if (d[static_cast<std::size_t>(j)] != 0) rem[k + static_cast<std::size_t>(j)] -= q * d[static_cast<std::size_t>(j)];
    }
    quo[k] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial interpolate(std::span<const InterpolationNode> nodes) {
  if (nodes.empty()) throw DomainError("interpolation needs at least one node");
  std::set<std::int64_t> seen;
  for (const auto& node : nodes) {
    if (!seen.insert(node.argument).second) throw DomainError("degenerate interpolation nodes");
  }

  // Newton divided differences, then expansion into the monomial basis.
  const std::size_t k = nodes.size();
  std::vector<Rational> diff(k);
  for (std::size_t i = 0; i < k; ++i) diff[i] = nodes[i].value;
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      const Rational span(BigInt(static_cast<long>(nodes[i].argument - nodes[i - level].argument)));
      diff[i] = (diff[i] - diff[i - 1]) / span;
    }
  }

  std::vector<Rational> result{diff[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    // result = result * (x - x_i) + diff[i]
    const Rational xi(BigInt(static_cast<long>(nodes[i].argument)));
    std::vector<Rational> next(result.size() + 1);
    for (std::size_t j = 0; j < result.size(); ++j) {
      next[j + 1] += result[j];
      next[j] -= xi * result[j];
    }
    next[0] += diff[i];
    result = std::move(next);
  }
  return Polynomial(std::move(result));
}

std::string to_string(const Polynomial& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (!unit || i == 0) os << c.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << variable;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace harmonium
