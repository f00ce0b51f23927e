#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "harmonium/polynomial.hpp"

namespace harmonium {

/// f(m) = constituent[r](m) where r = ((m mod p) + p) mod p, so negative
/// arguments select the same residue class as their positive shifts.
class Quasipolynomial {
 public:
  /// Throws DomainError if there are no constituents or one exceeds `degree`.
  Quasipolynomial(std::vector<Polynomial> constituents, int degree);

  std::int64_t period() const noexcept { return static_cast<std::int64_t>(constituents_.size()); }
  int degree() const noexcept { return degree_; }
  const std::vector<Polynomial>& constituents() const noexcept { return constituents_; }
  const Polynomial& constituent(std::int64_t residue) const;

  std::size_t residue_of(std::int64_t m) const noexcept;
  Rational operator()(std::int64_t m) const;

  friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;

 private:
  std::vector<Polynomial> constituents_;
  int degree_;
};

Rational quasi_eval(const Quasipolynomial& f, std::int64_t m);

}  // namespace harmonium
