#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "bqsos/catalog.h"
#include "bqsos/decomposer.h"
#include "bqsos/decomposition_io.h"
#include "bqsos/errors.h"
#include "bqsos/graph.h"
#include "bqsos/parse.h"
#include "oracles.h"

namespace bqsos {
namespace {

using testing::PopCount;

BiquadraticForm FromMask(std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j)
      if (testing::Edge(mask, 3, i, j)) edges.emplace_back(i, j);
  return SimpleForm(4, 3, edges);
}

std::size_t SimpleBound(int e) {
  if (e <= 7) return e;
  if (e == 8) return 6;
  if (e == 9) return 7;
  if (e <= 11) return 6;
  return 7;
}

TEST(Identities, C4IdentityAllIndexChoices) {
  for (int i = 1; i <= 4; ++i)
    for (int k = i + 1; k <= 4; ++k)
      for (int j = 1; j <= 3; ++j)
        for (int l = j + 1; l <= 3; ++l) {
          const auto sq = C4Identity(4, 3, i, k, j, l);
          const auto f = SimpleForm(4, 3, {{i, j}, {i, l}, {k, j}, {k, l}});
          ASSERT_EQ(Expand(sq), f);
        }
  EXPECT_THROW(C4Identity(4, 3, 1, 1, 1, 2), RangeError);
}

TEST(Identities, HurwitzFourSquares) {
  const auto sq = Hurwitz3x3(3, 3, {1, 2, 3});
  EXPECT_EQ(Expand(sq), AllOnesForm(3, 3));
  const auto sq4 = Hurwitz3x3(4, 3, {2, 3, 4});
  EXPECT_EQ(Expand(sq4), SimpleForm(4, 3, {{2, 1}, {2, 2}, {2, 3}, {3, 1},
                                           {3, 2}, {3, 3}, {4, 1}, {4, 2},
                                           {4, 3}}));
  EXPECT_THROW(Hurwitz3x3(3, 3, {1, 1, 2}), RangeError);
  EXPECT_THROW(Hurwitz3x3(3, 2, {1, 2, 3}), RangeError);
}

TEST(DecomposeSimple, FamilyUsesOneSquarePerTerm) {
  for (int s = 1; s <= 7; ++s) {
    const auto dec = DecomposeSimple(SimpleFamily(s));
    EXPECT_EQ(dec.size(), static_cast<std::size_t>(s));
    EXPECT_TRUE(dec.exact());
  }
}

TEST(DecomposeSimple, ExhaustiveWithinBounds) {
  for (std::uint64_t mask = 1; mask < 4096; ++mask) {
    const auto form = FromMask(mask);
    const auto dec = DecomposeSimple(form);
    const int e = PopCount(mask);
    ASSERT_TRUE(dec.exact());
    ASSERT_TRUE(CheckDecomposition(dec, 0).ok) << mask;
    ASSERT_LE(dec.size(), SimpleBound(e)) << mask;
  }
}

TEST(DecomposeSimple, RejectsOtherInput) {
  EXPECT_THROW(DecomposeSimple(EightSquareForm()), StructureError);
  EXPECT_THROW(DecomposeSimple(AllOnesForm(3, 3)), DimensionError);
}

TEST(YDeficient, Detection) {
  EXPECT_EQ(DetectYDeficient(EightSquareForm()), std::vector<int>{1});
  EXPECT_EQ(DetectYDeficient(WeightedDiagonalExample()),
            (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(DetectYDeficient(FullyCoupledExample()).empty());
  const auto neg = ParseForm("x1^2*y1^2 - x2^2*y3^2 + x2^2*y2^2", 4, 3);
  EXPECT_EQ(DetectYDeficient(neg), (std::vector<int>{1, 2}));
}

TEST(YDeficient, SplitOfEightSquareForm) {
  const auto q = EightSquareForm();
  const auto split = SplitYDeficient(q, 1);
  EXPECT_EQ(split.rest.m(), 4);
  EXPECT_EQ(split.rest.n(), 2);
  EXPECT_EQ(split.column_map, (std::vector<int>{2, 3}));
  EXPECT_EQ(split.weights, (std::vector<Rational>{1, 0, 1, 1}));
  EXPECT_EQ(Reassemble(split, 3), q);
  EXPECT_THROW(SplitYDeficient(q, 2), StructureError);
  EXPECT_THROW(SplitYDeficient(AllOnesForm(4, 1), 1), StructureError);
}

TEST(YDeficientProperty, SplitReassemblyOnQualifyingPairs) {
  std::vector<BiquadraticForm> suite{
      EightSquareForm(),  RankPreservingPerturbation(), WeightedDiagonalExample(),
      FullyCoupledExample(), AllOnesForm(3, 3),         AllOnesForm(4, 3)};
  for (int s = 1; s <= 7; ++s) suite.push_back(SimpleFamily(s));
  for (std::uint64_t mask = 1; mask < 4096; mask += 7) suite.push_back(FromMask(mask));
  int pairs = 0;
  for (const auto& form : suite) {
    for (int j0 : DetectYDeficient(form)) {
      if (form.n() < 2) continue;
      ASSERT_EQ(Reassemble(SplitYDeficient(form, j0), form.n()), form);
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 100);
}

TEST(YDeficient, EightSquareFormAtColumnOne) {
  const auto dec = DecomposeYDeficient(EightSquareForm(), 1, SearchConfig{});
  EXPECT_LE(dec.size(), 8u);
  EXPECT_TRUE(CheckDecomposition(dec, 1e-9).ok);
}

TEST(YDeficient, WeightedDiagonalBothRoutes) {
  const auto form = WeightedDiagonalExample();
  const auto split = DecomposeYDeficient(form, 3, SearchConfig{});
  EXPECT_LE(split.size(), 9u);
  EXPECT_TRUE(CheckDecomposition(split, 1e-9).ok);
  const auto rows = DecomposeDiagonalRowSplit(form, SearchConfig{});
  EXPECT_LE(rows.size(), 9u);
  EXPECT_TRUE(CheckDecomposition(rows, 1e-9).ok);
  EXPECT_THROW(DecomposeDiagonalRowSplit(EightSquareForm(), SearchConfig{}),
               StructureError);
}

TEST(Decompose, AutoStrategyOrder) {
  EXPECT_EQ(Decompose(SimpleFamily(7), Strategy::kAuto, {}).strategy, "simple");
  EXPECT_EQ(Decompose(EightSquareForm(), Strategy::kAuto, {}).strategy,
            "ydeficient");
  const auto coupled = Decompose(FullyCoupledExample(), Strategy::kAuto, {});
  EXPECT_EQ(coupled.strategy, "gram");
  EXPECT_TRUE(CheckDecomposition(coupled, 1e-9).ok);
}

TEST(Decompose, GramOnNonPsdFormFails) {
  SearchConfig c;
  c.max_restarts = 3;
  c.max_iterations = 200;
  const auto bad = ParseForm("x1^2*y1^2 - x2^2*y2^2", 2, 2);
  EXPECT_THROW(Decompose(bad, Strategy::kGram, c), SearchFailure);
}

TEST(Decompose, StrategyNames) {
  for (auto s : {Strategy::kAuto, Strategy::kSimple, Strategy::kYDeficient,
                 Strategy::kRowSplit, Strategy::kGram}) {
    EXPECT_EQ(ParseStrategy(ToString(s)), s);
  }
  EXPECT_THROW(ParseStrategy("magic"), RangeError);
}

TEST(DecompositionIo, RoundTrip) {
  auto dec = DecomposeYDeficient(WeightedDiagonalExample(), 3, SearchConfig{});
  const std::string text = FormatDecomposition(dec);
  const auto back = ParseDecomposition(text, 4, 3);
  EXPECT_EQ(back.target, dec.target);
  EXPECT_EQ(back.exact_squares, dec.exact_squares);
  EXPECT_EQ(back.numeric_squares.size(), dec.numeric_squares.size());
  EXPECT_EQ(back.strategy, dec.strategy);
  EXPECT_EQ(FormatDecomposition(back), text);
  EXPECT_TRUE(CheckDecomposition(back, 1e-9).ok);
}

TEST(DecompositionIo, WeightedSquareSyntax) {
  const auto dec = ParseDecomposition(
      "target: 2*x1^2*y1^2\nsqrt(2)*(x1*y1)\n", 4, 3);
  ASSERT_EQ(dec.exact_squares.size(), 1u);
  EXPECT_EQ(dec.exact_squares[0].weight, 2);
  EXPECT_TRUE(CheckDecomposition(dec, 0).ok);
  EXPECT_EQ(FormatSquare(dec.exact_squares[0]), "sqrt(2)*(x1*y1)");
}

TEST(DecompositionIo, Errors) {
  EXPECT_THROW(ParseDecomposition("x1*y1\n", 4, 3), ParseError);
  EXPECT_THROW(ParseDecomposition("# only\n", 4, 3), ParseError);
  EXPECT_THROW(ParseDecomposition("target: 0\nsqrt(-1)*(x1*y1)\n", 4, 3),
               ParseError);
  try {
    ParseDecomposition("target: 0\nx1*y1\nx1*q\n", 4, 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

}  // namespace
}  // namespace bqsos
