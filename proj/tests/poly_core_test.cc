#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bqsos/catalog.h"
#include "bqsos/errors.h"
#include "bqsos/form.h"
#include "bqsos/parse.h"
#include "bqsos/psd_sampling.h"
#include "bqsos/rational.h"
#include "oracles.h"

namespace bqsos {
namespace {

using testing::RandomBilinear;
using testing::RandomRationals;
using testing::SumOfSquaresAt;

QuarticMonomial M(int i, int k, int j, int l) {
  return QuarticMonomial::Make(i, k, j, l);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(*ParseRational("3"), Rational(3));
  EXPECT_EQ(*ParseRational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(*ParseRational("+6/4"), Rational(3, 2));
  EXPECT_FALSE(ParseRational("1/0"));
  EXPECT_FALSE(ParseRational("1.5"));
  EXPECT_FALSE(ParseRational(""));
  EXPECT_FALSE(ParseRational("2/"));
  EXPECT_EQ(ToString(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(ToString(Rational(0)), "0");
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(*ExactSqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_EQ(*ExactSqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(ExactSqrt(Rational(2)));
  EXPECT_FALSE(ExactSqrt(Rational(-4)));
}

TEST(Rational, ContinuedFractionConvergents) {
  // Convergents of pi: 3, 22/7, 333/106, 355/113, 103993/33102.
  EXPECT_EQ(BestRationalApproximation(3.14159265358979, 10), Rational(22, 7));
  EXPECT_EQ(BestRationalApproximation(3.14159265358979, 1000),
            Rational(355, 113));
  EXPECT_EQ(BestRationalApproximation(-0.5 + 1e-13, 1000), Rational(-1, 2));
  EXPECT_EQ(BestRationalApproximation(0.0, 1000), Rational(0));
}

TEST(Monomial, CanonicalOrder) {
  const auto a = M(4, 1, 3, 2);
  EXPECT_EQ(a.xi, 1);
  EXPECT_EQ(a.xk, 4);
  EXPECT_EQ(a.yj, 2);
  EXPECT_EQ(a.yl, 3);
  EXPECT_EQ(ToString(a), "x1*x4*y2*y3");
  EXPECT_EQ(ToString(M(1, 1, 1, 3)), "x1^2*y1*y3");
  EXPECT_TRUE(M(2, 2, 3, 3).is_pure_square());
}

TEST(Form, AddTermMergesAndDropsZeros) {
  BiquadraticForm f(4, 3);
  f.AddTerm(M(1, 4, 2, 3), 2);
  f.AddTerm(M(4, 1, 3, 2), -2);
  EXPECT_TRUE(f.is_zero());
  f.AddTerm(M(1, 1, 1, 1), Rational(1, 3));
  EXPECT_EQ(f.PureSquareCoefficient(1, 1), Rational(1, 3));
  EXPECT_THROW(f.AddTerm(M(5, 1, 1, 1), 1), BoundsError);
  EXPECT_THROW(f.AddTerm(M(1, 1, 1, 4), 1), BoundsError);
  EXPECT_THROW(BiquadraticForm(0, 3), BoundsError);
  EXPECT_THROW(BiquadraticForm(10, 3), BoundsError);
}

TEST(Form, ArithmeticChecksDimensions) {
  BiquadraticForm a(4, 3), b(3, 3);
  EXPECT_THROW(a += b, DimensionError);
  const auto q = EightSquareForm();
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ(Rational(2) * q, q + q);
}

TEST(Form, EvaluateEightSquareFormAtKnownPoint) {
  // x = (1,0,0,1), y = (0,1,1): x1^2 y2^2 + x1^2 y3^2 + 2 x1 x4 y2 y3 +
  // x4^2 y2^2 = 1 + 1 + 2 + 1.
  const std::vector<Rational> x{1, 0, 0, 1}, y{0, 1, 1};
  EXPECT_EQ(Evaluate(EightSquareForm(), x, y), Rational(5));
  EXPECT_THROW(Evaluate(EightSquareForm(), y, x), DimensionError);
}

TEST(Form, EightSquareWitnessExpandsExactly) {
  const auto squares = EightSquareWitness();
  ASSERT_EQ(squares.size(), 8u);
  EXPECT_EQ(Expand(squares), EightSquareForm());
}

TEST(Form, ExpandWeightedSquares) {
  BilinearForm l(2, 2);
  l.set(1, 1, 1);
  l.set(2, 2, 1);
  const std::vector<Square> s{Square{Rational(3), l}};
  const auto f = Expand(s, 2, 2);
  EXPECT_EQ(f.PureSquareCoefficient(1, 1), 3);
  EXPECT_EQ(f.Coefficient(M(1, 2, 1, 2)), 6);
}

TEST(Form, ExpandMixedDimensionsThrows) {
  std::vector<BilinearForm> v{BilinearForm(2, 2), BilinearForm(3, 2)};
  EXPECT_THROW(Expand(v), DimensionError);
  EXPECT_TRUE(Expand(std::span<const BilinearForm>{}, 4, 3).is_zero());
}

TEST(Form, VerifyReportsDifference) {
  const auto q = EightSquareForm();
  auto squares = AsSquares(EightSquareWitness());
  squares.pop_back();
  const VerifyResult r = VerifyDecomposition(SOSDecomposition{q, squares});
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.difference.term_count(), 1u);
  EXPECT_EQ(r.difference.PureSquareCoefficient(3, 3), -1);
}

TEST(FormProperty, ExpandEvaluateConsistencyOnRandomPoints) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BilinearForm> squares;
    for (int k = 0; k < 4; ++k) squares.push_back(RandomBilinear(rng, 4, 3));
    const auto form = Expand(squares);
    for (int p = 0; p < 20; ++p) {
      const auto x = RandomRationals(rng, 4), y = RandomRationals(rng, 3);
      ASSERT_EQ(Evaluate(form, x, y), SumOfSquaresAt(squares, x, y));
    }
  }
}

TEST(Parse, CanonicalOutput) {
  const auto f = ParseForm("2*x4*x1*y3*y2 + x1^2 * y1^2 - 1/2 x2*x2*y1*y1", 4, 3);
  EXPECT_EQ(FormatForm(f), "x1^2*y1^2 + 2*x1*x4*y2*y3 - 1/2*x2^2*y1^2");
  EXPECT_EQ(FormatForm(BiquadraticForm(2, 2)), "0");
  EXPECT_TRUE(ParseForm("0", 2, 2).is_zero());
  EXPECT_TRUE(ParseForm("x1^2*y1^2 - x1*x1*y1*y1", 2, 2).is_zero());
}

TEST(Parse, Errors) {
  EXPECT_THROW(ParseForm("x1^3*y1", 4, 3), DegreeError);
  EXPECT_THROW(ParseForm("x1*y1", 4, 3), DegreeError);
  EXPECT_THROW(ParseForm("3", 4, 3), DegreeError);
  EXPECT_THROW(ParseForm("x5^2*y1^2", 4, 3), BoundsError);
  EXPECT_THROW(ParseForm("x1^2*y1^2 +", 4, 3), ParseError);
  EXPECT_THROW(ParseForm("x1^2*z1^2", 4, 3), ParseError);
  try {
    ParseForm("x1^2*y1^2 + x1^2*q", 4, 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 10u);
  }
}

TEST(Parse, BilinearAndNumeric) {
  const auto l = ParseBilinear("x1*y3 - 2/3*x4*y2", 4, 3);
  EXPECT_EQ(l.at(1, 3), 1);
  EXPECT_EQ(l.at(4, 2), Rational(-2, 3));
  EXPECT_EQ(ParseBilinear(FormatBilinear(l), 4, 3), l);
  EXPECT_THROW(ParseBilinear("x1^2*y1", 4, 3), DegreeError);
  const auto v = ParseNumericBilinear("0.25*x1*y1 - 1.5e-3*x2*y2", 2, 2);
  EXPECT_DOUBLE_EQ(v.at(1, 1), 0.25);
  EXPECT_DOUBLE_EQ(v.at(2, 2), -1.5e-3);
  const auto w = ParseNumericBilinear(FormatNumericBilinear(v), 2, 2);
  EXPECT_EQ(w.coeffs, v.coeffs);
}

TEST(Parse, Monomial) {
  EXPECT_EQ(ParseMonomial("x1*x4*y2*y3", 4, 3), M(1, 4, 2, 3));
  EXPECT_EQ(ParseMonomial("x1^2*y1*y3", 4, 3), M(1, 1, 1, 3));
  EXPECT_THROW(ParseMonomial("2*x1^2*y1^2", 4, 3), ParseError);
}

TEST(ParseProperty, RoundTripOnRandomForms) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> idx_m(1, 4), idx_n(1, 3), num(-20, 20),
      den(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    BiquadraticForm f(4, 3);
    for (int t = 0; t < 8; ++t) {
      f.AddTerm(M(idx_m(rng), idx_m(rng), idx_n(rng), idx_n(rng)),
                Rational(num(rng), den(rng)));
    }
    ASSERT_EQ(ParseForm(FormatForm(f), 4, 3), f) << FormatForm(f);
  }
}

TEST(Catalog, SimpleFamilyEdges) {
  for (int s = 1; s <= 7; ++s) {
    const auto f = SimpleFamily(s);
    EXPECT_EQ(f.term_count(), static_cast<std::size_t>(s));
    EXPECT_TRUE(f.IsDiagonal());
  }
  EXPECT_EQ(SimpleFamily(7).PureSquareCoefficient(4, 1), 1);
  EXPECT_THROW(SimpleFamily(0), RangeError);
  EXPECT_THROW(SimpleFamily(8), RangeError);
}

TEST(Catalog, NamedForms) {
  const auto q = EightSquareForm();
  EXPECT_EQ(q - SimpleFamily(7),
            ParseForm("x1^2*y3^2 + 2*x1*x4*y2*y3 + x4^2*y2^2", 4, 3));
  EXPECT_EQ(RankPreservingPerturbation() - SimpleFamily(7),
            ParseForm("x1^2*y3^2 + 2*x1*x2*y1*y3 + x2^2*y1^2", 4, 3));
  const auto d = WeightedDiagonalExample();
  EXPECT_TRUE(d.IsDiagonal());
  EXPECT_EQ(d.PureSquareCoefficient(2, 2), 7);
  EXPECT_EQ(d.PureSquareCoefficient(4, 3), 1);
  EXPECT_EQ(AllOnesForm(3, 3).term_count(), 9u);
  EXPECT_EQ(FullyCoupledExample().term_count(), 12u);
}

TEST(PsdSampling, FindsNegativePoint) {
  const auto f = ParseForm("x1^2*y1^2 - x2^2*y2^2", 2, 2);
  const auto p = PsdSampleCheck(f, 100, 1);
  ASSERT_TRUE(p);
  EXPECT_LT(p->value, 0);
  EXPECT_EQ(Evaluate(f, p->x, p->y), p->value);
  EXPECT_FALSE(PsdSampleCheck(EightSquareForm(), 500, 3));
  EXPECT_THROW(PsdSampleCheck(f, 0, 1), RangeError);
}

}  // namespace
}  // namespace bqsos
