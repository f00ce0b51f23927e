#include <gtest/gtest.h>

#include "harmonium/fit.hpp"
#include "harmonium/serialize.hpp"

namespace harmonium {
namespace {

TEST(Serialize, QuasipolynomialSchema) {
  const Quasipolynomial q({Polynomial({make_rational(-1, 2), 0, 1}), Polynomial::from_integers({0, 0, 1})}, 2);
  const Json j = to_json(q);
  EXPECT_EQ(j.dump(), R"({"period":2,"degree":2,"constituents":[["-1/2","0/1","1/1"],["0/1","0/1","1/1"]]})");
  EXPECT_EQ(quasipolynomial_from_json(j), q);
}

TEST(Serialize, GeneratingFunctionSchema) {
  const RationalGeneratingFunction g(Polynomial::monomial(2, 2), {{1, 3}});
  const Json j = to_json(g);
  EXPECT_EQ(j.dump(), R"({"numerator":["0/1","0/1","2/1"],"denominator":[[1,3]]})");
  EXPECT_EQ(generating_function_from_json(j), g);
  const RationalGeneratingFunction odd(Polynomial::constant(1), {{2, 1}}, Polynomial::from_integers({1, -2}));
  EXPECT_EQ(generating_function_from_json(to_json(odd)), odd);
}

TEST(Serialize, EmittedJsonRoundTripsByteForByte) {
  const auto report = fit_quasipolynomial(brute_force_oracle(family(Family::path, 3)), 3,
                                          default_period_candidates(3));
  Json doc;
  doc["fit"] = to_json(report);
  doc["unreduced"] = to_json(unreduced_generating_function(report));
  doc["regions"] = to_json(count_nonempty_regions(family(Family::path, 3), 6));
  const std::string text = doc.dump(2);
  EXPECT_EQ(Json::parse(text).dump(2), text);
  EXPECT_EQ(quasipolynomial_from_json(Json::parse(text)["fit"]["quasipolynomial"]), report.quasipolynomial);
}

}  // namespace
}  // namespace harmonium
