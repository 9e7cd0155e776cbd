#include "bqsos/catalog.h"

#include <array>

#include "bqsos/errors.h"
#include "bqsos/parse.h"

namespace bqsos {

namespace {

constexpr std::array<std::pair<int, int>, 7> kFamilyEdges = {{
    {1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {3, 1}, {4, 1},
}};

}  // namespace

BiquadraticForm SimpleFamily(int s) {
  if (s < 1 || s > static_cast<int>(kFamilyEdges.size())) {
    throw RangeError("simple family index " + std::to_string(s) +
                     " outside 1..7");
  }
  return SimpleForm(4, 3, {kFamilyEdges.begin(), kFamilyEdges.begin() + s});
}

BiquadraticForm SimpleForm(int m, int n,
                           const std::vector<std::pair<int, int>>& edges) {
  BiquadraticForm form(m, n);
  for (auto [i, j] : edges) {
    if (sgn(form.PureSquareCoefficient(i, j)) != 0) {
      throw StructureError("duplicate edge in simple form");
    }
    form.AddTerm(QuarticMonomial::Make(i, i, j, j), Rational(1));
  }
  return form;
}

BiquadraticForm AllOnesForm(int m, int n) {
  BiquadraticForm form(m, n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      form.AddTerm(QuarticMonomial::Make(i, i, j, j), Rational(1));
    }
  }
  return form;
}

BiquadraticForm EightSquareForm() {
  BiquadraticForm form = SimpleFamily(7);
  const BilinearForm extra = ParseBilinear("x4*y2 + x1*y3", 4, 3);
  form += Expand(std::span<const BilinearForm>(&extra, 1), 4, 3);
  return form;
}

std::vector<BilinearForm> EightSquareWitness() {
  std::vector<BilinearForm> out;
  for (const char* text : {"x1*y1", "x4*y1", "x1*y2", "x1*y3 + x4*y2",
                           "x2*y2", "x2*y3", "x3*y1", "x3*y3"}) {
    out.push_back(ParseBilinear(text, 4, 3));
  }
  return out;
}

BiquadraticForm RankPreservingPerturbation() {
  BiquadraticForm form = SimpleFamily(7);
  const BilinearForm extra = ParseBilinear("x1*y3 + x2*y1", 4, 3);
  form += Expand(std::span<const BilinearForm>(&extra, 1), 4, 3);
  return form;
}

BiquadraticForm WeightedDiagonalExample() {
  constexpr int kBlock[3][3] = {{1, 2, 1}, {3, 7, 1}, {1, 1, 2}};
  constexpr int kLastRow[3] = {1, 1, 1};
  BiquadraticForm form(4, 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      form.AddTerm(QuarticMonomial::Make(i, i, j, j),
                   Rational(kBlock[i - 1][j - 1]));
    }
  }
  for (int j = 1; j <= 3; ++j) {
    form.AddTerm(QuarticMonomial::Make(4, 4, j, j), Rational(kLastRow[j - 1]));
  }
  return form;
}

BiquadraticForm FullyCoupledExample() {
  BiquadraticForm form = AllOnesForm(3, 3);
  form += ParseForm("2*x1*x2*y1*y2 + 2*x2*x3*y2*y3 + 2*x1*x3*y1*y3", 3, 3);
  return form;
}

}  // namespace bqsos
