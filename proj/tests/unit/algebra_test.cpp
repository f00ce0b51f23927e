#include <gtest/gtest.h>

#include "harmonium/enumerate.hpp"
#include "harmonium/graph.hpp"

#include <vector>

#include "harmonium/error.hpp"
#include "harmonium/generating_function.hpp"
#include "harmonium/matrix.hpp"
#include "harmonium/polynomial.hpp"
#include "harmonium/quasipolynomial.hpp"
#include "harmonium/rational.hpp"

namespace harmonium {
namespace {

TEST(Rational, FormatsAsFraction) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("-3/2"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  const auto p = Polynomial::from_integers({-1, 0, 1});  // m^2 - 1
  const auto q = Polynomial::from_integers({1, 1});      // m + 1
  EXPECT_EQ(p(3), Rational(8));
  EXPECT_EQ(exact_quotient(p, q), Polynomial::from_integers({-1, 1}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(gcd(p, Polynomial::from_integers({1, 2, 1})), q);
  const auto d = divide(Polynomial::from_integers({1, 0, 0, 1}), Polynomial::from_integers({0, 1}));
  EXPECT_EQ(d.remainder, Polynomial::constant(1));
  EXPECT_THROW(exact_quotient(q, p), DomainError);
}

TEST(Polynomial, InterpolationRecoversCubic) {
  const auto f = Polynomial::from_integers({3, -2, 0, 5});
  std::vector<InterpolationNode> nodes;
  for (std::int64_t x : {-1, 2, 4, 7}) nodes.push_back({x, f(x)});
  EXPECT_EQ(interpolate(nodes), f);
  nodes.push_back({2, 0});
  EXPECT_THROW(interpolate(nodes), DomainError);
}

TEST(Quasipolynomial, NegativeArgumentsUseResidueClass) {
  Quasipolynomial q({Polynomial::from_integers({0, 1}), Polynomial::from_integers({1, 1})}, 1);
  EXPECT_EQ(q(4), Rational(4));
  EXPECT_EQ(q(5), Rational(6));
  EXPECT_EQ(q(-3), Rational(-2));
  EXPECT_EQ(q.residue_of(-3), 1u);
  EXPECT_THROW(Quasipolynomial({}, 1), DomainError);
  EXPECT_THROW(Quasipolynomial({Polynomial::from_integers({0, 0, 1})}, 1), DomainError);
}

TEST(GeneratingFunction, SquareMinusLinearSeries) {
  // m^2 - m for m = 1..N sums to 2 z^2 / (1 - z)^3.
  std::vector<BigInt> counts;
  for (long m = 1; m <= 12; ++m) counts.push_back(m * m - m);
  const auto g = gf_from_counts(counts, 1, 2);
  const RationalGeneratingFunction expected(Polynomial::monomial(2, 2), {{1, 3}});
  EXPECT_EQ(g, expected);
  const auto reduced = reduce_gf(g);
  EXPECT_FALSE(reduced.warning);
  EXPECT_EQ(reduced.value.numerator(), Polynomial::monomial(2, 2));
  EXPECT_EQ(reduced.value.denominator_factors(), (std::vector<DenominatorFactor>{{1, 3}}));
}

TEST(GeneratingFunction, PeriodTwoReducesToMixedFactors) {
  // floor(m/2): sum is z^2 / ((1 - z)(1 - z^2)).
  std::vector<BigInt> counts;
  for (long m = 1; m <= 20; ++m) counts.push_back(m / 2);
  const auto g = gf_from_counts(counts, 2, 1);
  const RationalGeneratingFunction expected(Polynomial::monomial(1, 2), {{1, 1}, {2, 1}});
  EXPECT_EQ(g, expected);
  const auto reduced = reduce_gf(g).value;
  EXPECT_EQ(reduced.numerator(), Polynomial::monomial(1, 2));
  EXPECT_EQ(reduced.denominator_factors(), (std::vector<DenominatorFactor>{{1, 1}, {2, 1}}));
  const auto s = g.series(8);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i], Rational(static_cast<long>(i) / 2));
}

TEST(GeneratingFunction, RejectsInconsistentSequence) {
  std::vector<BigInt> counts;
  for (long m = 1; m <= 12; ++m) counts.push_back(m * m * m);
  EXPECT_THROW(gf_from_counts(counts, 1, 2), DomainError);
  EXPECT_THROW(gf_from_counts(std::span<const BigInt>(counts).first(2), 1, 2), DomainError);
}

TEST(GeneratingFunction, LeftoverWhenNotCyclotomicProduct) {
  // 1 / (1 - 2z) cannot be written with (1 - z^k) factors.
  const RationalGeneratingFunction g(Polynomial::constant(1), {}, Polynomial::from_integers({1, -2}));
  const auto r = reduce_gf(g);
  EXPECT_TRUE(r.warning);
  EXPECT_EQ(r.value, g);
}

TEST(GeneratingFunction, EqualityIsCrossMultiplied) {
  const RationalGeneratingFunction a(Polynomial::from_integers({0, 1}), {{1, 1}});
  const RationalGeneratingFunction b(Polynomial::from_integers({0, 1, 1}), {{2, 1}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(series_equal(a, b));
  EXPECT_NE(a, RationalGeneratingFunction(Polynomial::from_integers({0, 2}), {{1, 1}}));
}

TEST(GeneratingFunction, ExpressOverLargerDenominator) {
  const RationalGeneratingFunction g(Polynomial::monomial(1, 2), {{1, 1}, {2, 1}});
  const auto over = express_over(g, {{1, 2}, {2, 1}});
  EXPECT_EQ(over.numerator(), Polynomial::from_integers({0, 0, 1, -1}));
  EXPECT_EQ(over, g);
  EXPECT_THROW(express_over(g, {{1, 2}}), DomainError);
}

TEST(Matrix, ExactRank) {
  IntegerMatrix m(3, 3);
  const long values[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = values[i][j];
  EXPECT_EQ(exact_rank(m), 2u);
  EXPECT_EQ(exact_rank(std::vector<RationalRow>{{make_rational(1, 3), 1}, {1, 3}}), 1u);
}

TEST(Polynomial, InterpolationSmallCases) {
  const std::vector<InterpolationNode> squares{{1, 1}, {2, 4}, {3, 9}};
  EXPECT_EQ(interpolate(squares), Polynomial::from_integers({0, 0, 1}));
  const std::vector<InterpolationNode> zero{{0, 0}};
  EXPECT_TRUE(interpolate(zero).is_zero());
  const std::vector<InterpolationNode> falling{{1, 0}, {2, 2}, {3, 6}, {4, 12}};
  EXPECT_EQ(interpolate(falling), Polynomial::from_integers({0, -1, 1}));
  try {
    const std::vector<InterpolationNode> repeated{{1, 0}, {1, 1}};
    interpolate(repeated);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "degenerate interpolation nodes");
  }
}

TEST(Quasipolynomial, EvaluatesPeriodOneAtMinusOne) {
  const Quasipolynomial f({Polynomial::from_integers({0, -1, 1})}, 2);
  EXPECT_EQ(quasi_eval(f, -1), Rational(2));
}

TEST(GeneratingFunction, PathThreeNumeratorOverPeriodTwo) {
  std::vector<BigInt> counts;
  for (long m = 1; m <= 16; ++m) counts.push_back(count_nowhere_harmonic(family(Family::path, 3), m));
  const auto g = gf_from_counts(counts, 2, 3);
  EXPECT_EQ(g.numerator(), Polynomial::from_integers({0, 0, 2, 10, 24, 32, 22, 6}));
  EXPECT_EQ(g.denominator_factors(), (std::vector<DenominatorFactor>{{2, 4}}));
  const auto reduced = reduce_gf(g).value;
  EXPECT_EQ(reduced.numerator(), Polynomial::from_integers({0, 0, 2, 4, 6}));
  EXPECT_EQ(reduced.denominator_factors(), (std::vector<DenominatorFactor>{{1, 3}, {2, 1}}));
}

TEST(GeneratingFunction, TriangleReducedForm) {
  std::vector<BigInt> counts;
  for (long m = 1; m <= 16; ++m) counts.push_back(count_nowhere_harmonic(family(Family::complete, 3), m));
  const auto reduced = reduce_gf(gf_from_counts(counts, 2, 3)).value;
  EXPECT_EQ(reduced.numerator(), Polynomial::from_integers({0, 0, 6, 0, 6}));
  EXPECT_EQ(reduced.denominator_factors(), (std::vector<DenominatorFactor>{{1, 3}, {2, 1}}));
}

TEST(GeneratingFunction, ZeroCountsGiveZeroNumerator) {
  const std::vector<BigInt> zeros(12, 0);
  EXPECT_TRUE(gf_from_counts(zeros, 2, 2).numerator().is_zero());
}

TEST(GeneratingFunction, SeriesOfReducedFormReproducesCounts) {
  std::vector<BigInt> counts;
  for (long m = 1; m <= 40; ++m) counts.push_back(m * m * (m % 3) + m / 2);
  const auto reduced = reduce_gf(gf_from_counts(counts, 6, 3)).value;
  const auto s = reduced.series(41);
  for (long m = 1; m <= 40; ++m) EXPECT_EQ(s[m], Rational(counts[m - 1]));
}

}  // namespace
}  // namespace harmonium
