#include "harmonium/rational.hpp"

#include <cctype>

#include "harmonium/error.hpp"

namespace harmonium {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt power(std::int64_t base, unsigned long exponent) {
  BigInt b = static_cast<long>(base);
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exponent);
  return result;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw DomainError("malformed integer '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

}  // namespace harmonium
