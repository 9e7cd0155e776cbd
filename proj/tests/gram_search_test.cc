#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bqsos/catalog.h"
#include "bqsos/decomposer.h"
#include "bqsos/errors.h"
#include "bqsos/gram_search.h"
#include "oracles.h"

namespace bqsos {
namespace {

using testing::RandomBilinear;

TEST(GramSystem, ShapeAndMultiplicities) {
  const GramSystem s = BuildGramSystem(EightSquareForm());
  EXPECT_EQ(s.basis_size(), 12);
  // C(4+1, 2) * C(3+1, 2) canonical monomials.
  EXPECT_EQ(s.constraints().size(), 60u);
  int total = 0, nonzero = 0;
  for (const auto& c : s.constraints()) {
    for (const auto& e : c.entries) {
      total += e.multiplicity;
      EXPECT_EQ(e.multiplicity, e.a == e.b ? 1 : 2);
      EXPECT_EQ(s.ConstraintOf(e.a, e.b), &c - s.constraints().data());
      EXPECT_EQ(s.ConstraintOf(e.b, e.a), s.ConstraintOf(e.a, e.b));
    }
    if (c.target != 0) ++nonzero;
  }
  EXPECT_EQ(total, 144);
  EXPECT_EQ(nonzero, 10);
  EXPECT_EQ(s.basis(0), (std::pair{1, 1}));
  EXPECT_EQ(s.basis(11), (std::pair{4, 3}));
}

TEST(GramSystem, CrossTermHasTwoPositions) {
  const GramSystem s = BuildGramSystem(EightSquareForm());
  const auto& c = s.constraints()[s.ConstraintOf(2, 10)];  // x1y3 . x4y2
  EXPECT_EQ(c.monomial, QuarticMonomial::Make(1, 4, 2, 3));
  EXPECT_EQ(c.entries.size(), 2u);
  EXPECT_EQ(c.target, 2);
}

TEST(GramProperty, DecompositionsSatisfyTheirOwnSystem) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BilinearForm> squares;
    const int count = 1 + trial % 6;
    for (int k = 0; k < count; ++k) squares.push_back(RandomBilinear(rng, 4, 3));
    const auto form = Expand(squares);
    const auto gram = GramFromSquares(AsSquares(squares), 4, 3);
    ASSERT_TRUE(SatisfiesExactly(BuildGramSystem(form), gram));
    const auto factor = FactorFromSquares(squares);
    ASSERT_LT(MaxResidual(BuildGramSystem(form), factor), 1e-12);
  }
}

TEST(GramProperty, PerturbedGramFails) {
  const auto squares = EightSquareWitness();
  auto gram = GramFromSquares(AsSquares(squares), 4, 3);
  gram[1] += 1;
  EXPECT_FALSE(SatisfiesExactly(BuildGramSystem(EightSquareForm()), gram));
}

TEST(SearchConfig, Validate) {
  SearchConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.tolerance = 0;
  EXPECT_THROW(c.Validate(), RangeError);
  c = SearchConfig{};
  c.max_restarts = 0;
  EXPECT_THROW(c.Validate(), RangeError);
}

TEST(LowRankSearch, AllOnesThreeByThreeRankFour) {
  const GramSystem s = BuildGramSystem(AllOnesForm(3, 3));
  const auto f = LowRankSearch(s, 4, SearchConfig{});
  ASSERT_TRUE(f);
  EXPECT_EQ(f->rank(), 4);
  EXPECT_LE(MaxResidual(s, *f), 1e-9);
}

TEST(LowRankSearch, DeterministicForFixedSeed) {
  const GramSystem s = BuildGramSystem(AllOnesForm(3, 3));
  SearchConfig c;
  c.seed = 42;
  const auto a = LowRankSearch(s, 4, c), b = LowRankSearch(s, 4, c);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->columns, b->columns);
}

TEST(LowRankSearch, RankOneCannotMatchTwoByTwoOnes) {
  SearchConfig c;
  c.max_restarts = 20;
  const auto form = AllOnesForm(2, 2);
  EXPECT_FALSE(LowRankSearch(BuildGramSystem(form), 1, c));
  const auto bound = MinRankUpperBound(form, 4, c);
  ASSERT_TRUE(bound);
  EXPECT_EQ(bound->rank, 2);
}

TEST(LowRankSearch, ZeroFormHasRankZero) {
  const auto bound = MinRankUpperBound(BiquadraticForm(4, 3), 3, SearchConfig{});
  ASSERT_TRUE(bound);
  EXPECT_EQ(bound->rank, 0);
}

TEST(Rationalize, RecoversWitnessFromNearbyFactor) {
  const auto q = EightSquareForm();
  FactorMatrix start = FactorFromSquares(EightSquareWitness());
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> noise(-1e-6, 1e-6);
  for (int r = 0; r < start.columns.rows(); ++r)
    for (int c = 0; c < start.columns.cols(); ++c)
      start.columns(r, c) += noise(rng);
  const GramSystem s = BuildGramSystem(q);
  const auto refined = RefineFactor(s, start, SearchConfig{});
  ASSERT_TRUE(refined);
  EXPECT_LE(MaxResidual(s, *refined), 1e-9);
  const auto exact = Rationalize(*refined, q, 100);
  ASSERT_TRUE(exact);
  EXPECT_EQ(exact->squares.size(), 8u);
  EXPECT_TRUE(VerifyDecomposition(*exact).equal);
}

TEST(Rationalize, RejectsInexactRounding) {
  FactorMatrix f = FactorFromSquares(EightSquareWitness());
  f.columns(0, 0) = 0.7;
  EXPECT_FALSE(Rationalize(f, EightSquareForm(), 1000));
}

TEST(Factor, TextRoundTrip) {
  const GramSystem s = BuildGramSystem(AllOnesForm(3, 3));
  const auto f = LowRankSearch(s, 4, SearchConfig{});
  ASSERT_TRUE(f);
  const auto g = ParseFactor(FormatFactor(*f), 3, 3);
  EXPECT_EQ(g.columns, f->columns);
  EXPECT_THROW(ParseFactor(FormatFactor(*f), 4, 3), ParseError);
  EXPECT_THROW(ParseFactor("2 9\n1 2", 3, 3), ParseError);
}

TEST(Factor, RowsToBilinear) {
  const auto rows = RowsToBilinear(FactorFromSquares(EightSquareWitness()));
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_DOUBLE_EQ(rows[3].at(1, 3), 1.0);
  EXPECT_DOUBLE_EQ(rows[3].at(4, 2), 1.0);
  const auto expanded = ExpandNumeric(rows);
  EXPECT_DOUBLE_EQ(expanded.at(QuarticMonomial::Make(1, 4, 2, 3)), 2.0);
}

}  // namespace
}  // namespace bqsos
