#include <gtest/gtest.h>

#include "dspec/corpus.hpp"
#include "dspec/error.hpp"
#include "dspec/expectation.hpp"

using namespace dspec;

namespace {

Polynomial P(std::initializer_list<long> descending) {
  std::vector<Rational> c;
  for (long x : descending) c.emplace_back(x);
  return Polynomial::from_descending(c);
}

}  // namespace

TEST(Expectation, ParsesItems) {
  EXPECT_EQ(parse_expected("5,3,0").exact_factor, P({1, -8, 15, 0}));
  EXPECT_EQ(parse_expected("0^3").exact_factor, P({1, 0, 0, 0}));
  // (t - 1)^2 - 2
  EXPECT_EQ(parse_expected("pm(1,1,2)").exact_factor, P({1, -2, -1}));
  // +-i sqrt 6
  EXPECT_EQ(parse_expected("pm(0,1,-6)").exact_factor, P({1, 0, 6}));
  // (t^2 + 7/2)^2 - 45/4 = t^4 + 7t^2 + 1
  EXPECT_EQ(parse_expected("nested(0,-7/2,3/2,5)").exact_factor, P({1, 0, 7, 0, 1}));
  EXPECT_EQ(parse_expected("poly(1,0,-2)").exact_factor, P({1, 0, -2}));
  auto e = parse_expected("~2.80194, 1, ~-0.24698");
  EXPECT_EQ(e.decimals.size(), 2u);
  EXPECT_EQ(e.size(), 3u);
  EXPECT_DOUBLE_EQ(e.decimals[1], -0.24698);
}

TEST(Expectation, RejectsMalformedItems) {
  for (const char* bad : {"pm(1,2)", "~x", "~1.2.3", "nested(1)", "poly(2,1)", "abc", "1/0"})
    EXPECT_THROW(parse_expected(bad), ParseError) << bad;
}

TEST(Expectation, MatchesExactAndDecimal) {
  Digraph d1 = corpus::load("d1");
  auto lap = spectrum(d1, MatrixKind::Laplacian);
  EXPECT_TRUE(match_spectrum(lap, parse_expected("5,3,0")).ok);
  EXPECT_FALSE(match_spectrum(lap, parse_expected("5,3")).ok);
  EXPECT_FALSE(match_spectrum(lap, parse_expected("5,3,1")).ok);
  EXPECT_TRUE(match_spectrum(lap, parse_expected("~5.00001,3,0")).ok);
  EXPECT_FALSE(match_spectrum(lap, parse_expected("~5.001,3,0")).ok);
  auto c = spectrum(corpus::load("d1_c"), MatrixKind::Adjacency);
  EXPECT_TRUE(match_spectrum(c, parse_expected("~2.80194,~1.44504,1,1,~-0.24698")).ok);
  EXPECT_FALSE(match_spectrum(c, parse_expected("~2.80194,~1.44504,1,1,~-0.2471")).ok);
  auto m = match_spectrum(c, parse_expected("~2.80194,~1.44504,1,1,1"));
  EXPECT_FALSE(m.ok);
  EXPECT_FALSE(m.detail.empty());
}

TEST(Expectation, FloatReportsUseBothTolerances) {
  auto nl = spectrum(corpus::load("d3"), MatrixKind::NormalizedLaplacian);
  EXPECT_TRUE(match_spectrum(nl, parse_expected("4/3,0")).ok);
  EXPECT_TRUE(match_spectrum(nl, parse_expected("~1.33333,0")).ok);
  EXPECT_FALSE(match_spectrum(nl, parse_expected("4/3")).ok);
  EXPECT_FALSE(match_spectrum(nl, parse_expected("~1.334,0")).ok);
  EXPECT_THROW(parse_expected("1.3333,0"), ParseError);
}
