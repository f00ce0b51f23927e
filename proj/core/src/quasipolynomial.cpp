#include "harmonium/quasipolynomial.hpp"

#include "harmonium/error.hpp"

namespace harmonium {

Quasipolynomial::Quasipolynomial(std::vector<Polynomial> constituents, int degree)
    : constituents_(std::move(constituents)), degree_(degree) {
  if (constituents_.empty()) throw DomainError("quasipolynomial needs a positive period");
  if (degree_ < 0) throw DomainError("quasipolynomial degree must be nonnegative");
  for (const auto& c : constituents_) {
    if (c.degree() > degree_) throw DomainError("constituent degree exceeds quasipolynomial degree");
  }
}

const Polynomial& Quasipolynomial::constituent(std::int64_t residue) const {
  if (residue < 0 || residue >= period()) throw DomainError("residue outside 0..period-1");
  return constituents_[static_cast<std::size_t>(residue)];
}

std::size_t Quasipolynomial::residue_of(std::int64_t m) const noexcept {
  const std::int64_t p = period();
  return static_cast<std::size_t>(((m % p) + p) % p);
}

Rational Quasipolynomial::operator()(std::int64_t m) const {
  return constituents_[residue_of(m)](m);
}

Rational quasi_eval(const Quasipolynomial& f, std::int64_t m) { return f(m); }

}  // namespace harmonium
