#include "bqsos/decomposer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bqsos/errors.h"
#include "bqsos/graph.h"

namespace bqsos {

namespace {

BilinearForm Monomial(int m, int n, int i, int j, const Rational& c) {
  BilinearForm l(m, n);
  l.set(i, j, c);
  return l;
}

// c * (x_i y_j)^2 as an exact square, folding sqrt(c) into the
// coefficient when c is a rational square.
Square SingleSquare(int m, int n, int i, int j, const Rational& c) {
  if (auto root = ExactSqrt(c)) return Square{Rational(1), Monomial(m, n, i, j, *root)};
  return Square{c, Monomial(m, n, i, j, Rational(1))};
}

std::vector<Square> Singles(const BiquadraticForm& form) {
  std::vector<Square> out;
  for (const auto& [mono, c] : form.coefficients()) {
    out.push_back(SingleSquare(form.m(), form.n(), mono.xi, mono.yj, c));
  }
  return out;
}

bool NonnegativeDiagonal(const BiquadraticForm& form) {
  return std::all_of(form.coefficients().begin(), form.coefficients().end(),
                     [](const auto& e) {
                       return e.first.is_pure_square() && sgn(e.second) > 0;
                     });
}

// Sub-form on the given columns; column c of the result is cols[c-1].
BiquadraticForm RestrictColumns(const BiquadraticForm& form,
                                const std::vector<int>& cols) {
  BiquadraticForm out(form.m(), static_cast<int>(cols.size()));
  auto local = [&](int col) {
    auto it = std::find(cols.begin(), cols.end(), col);
    return it == cols.end() ? 0 : static_cast<int>(it - cols.begin()) + 1;
  };
  for (const auto& [mono, c] : form.coefficients()) {
    const int j = local(mono.yj);
    const int l = local(mono.yl);
    if (j && l) out.AddTerm(QuarticMonomial::Make(mono.xi, mono.xk, j, l), c);
  }
  return out;
}

BiquadraticForm RestrictRows(const BiquadraticForm& form,
                             const std::vector<int>& rows) {
  BiquadraticForm out(static_cast<int>(rows.size()), form.n());
  auto local = [&](int row) {
    auto it = std::find(rows.begin(), rows.end(), row);
    return it == rows.end() ? 0 : static_cast<int>(it - rows.begin()) + 1;
  };
  for (const auto& [mono, c] : form.coefficients()) {
    const int i = local(mono.xi);
    const int k = local(mono.xk);
    if (i && k) out.AddTerm(QuarticMonomial::Make(i, k, mono.yj, mono.yl), c);
  }
  return out;
}

// Re-embeds a square over a sub-grid; row_map / col_map send local
// 1-based indices to global ones.
BilinearForm Lift(const BilinearForm& l, const std::vector<int>& row_map,
                  const std::vector<int>& col_map, int m, int n) {
  BilinearForm out(m, n);
  for (int i = 1; i <= l.m(); ++i) {
    for (int j = 1; j <= l.n(); ++j) {
      if (sgn(l.at(i, j)) != 0) out.set(row_map[i - 1], col_map[j - 1], l.at(i, j));
    }
  }
  return out;
}

NumericBilinearForm Lift(const NumericBilinearForm& l,
                         const std::vector<int>& row_map,
                         const std::vector<int>& col_map, int m, int n) {
  NumericBilinearForm out{m, n, std::vector<double>(m * n, 0.0)};
  for (int i = 1; i <= l.m; ++i) {
    for (int j = 1; j <= l.n; ++j) {
      out.coeffs[(row_map[i - 1] - 1) * n + (col_map[j - 1] - 1)] = l.at(i, j);
    }
  }
  return out;
}

std::vector<int> Iota(int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = i + 1;
  return v;
}

struct BlockResult {
  std::vector<Square> exact;
  std::vector<NumericBilinearForm> numeric;
  std::string how;
};

// At most `target_rank` squares for a block, trying the exact shortcuts
// before the rank search.
BlockResult DecomposeBlock(const BiquadraticForm& block, int target_rank,
                           const SearchConfig& config, long denominator_bound) {
  BlockResult out;
  if (block.is_zero()) {
    out.how = "empty block";
    return out;
  }
  if (NonnegativeDiagonal(block) &&
      static_cast<int>(block.term_count()) <= target_rank) {
    out.exact = Singles(block);
    out.how = "single squares";
    return out;
  }
  if (block.n() == 3 && target_rank >= 4 && block.IsDiagonal() &&
      block.term_count() == static_cast<std::size_t>(3 * block.m())) {
    // A uniform 3x3 block is a scaled Hurwitz identity.
    const Rational c = block.coefficients().begin()->second;
    const bool uniform =
        block.m() == 3 && sgn(c) > 0 &&
        std::all_of(block.coefficients().begin(), block.coefficients().end(),
                    [&](const auto& e) { return e.second == c; });
    if (uniform) {
      for (BilinearForm& l : Hurwitz3x3(3, 3, {1, 2, 3})) {
        out.exact.push_back(Square{c, std::move(l)});
      }
      out.how = "scaled Hurwitz identity";
      return out;
    }
  }
  const GramSystem system = BuildGramSystem(block);
  auto factor = LowRankSearch(system, target_rank, config);
  if (!factor) {
    throw SearchFailure("rank search found no " + std::to_string(target_rank) +
                        "-square representation of the " +
                        std::to_string(block.m()) + "x" +
                        std::to_string(block.n()) +
                        " block within the budget (inconclusive)");
  }
  if (auto exact = Rationalize(*factor, block, denominator_bound)) {
    out.exact = std::move(exact->squares);
    out.how = "rank search, rationalized exactly";
  } else {
    out.numeric = RowsToBilinear(*factor);
    out.how = "rank search, numeric (rationalization failed)";
  }
  return out;
}

void Finish(Decomposition& dec, double tolerance) {
  const DecompositionCheck check = CheckDecomposition(dec, tolerance);
  if (!check.ok) {
    throw Error("internal: " + dec.strategy +
                " decomposition failed verification");
  }
  if (check.exact) {
    dec.notes.push_back("verified exactly");
  } else {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "verified numerically: max coefficient error %.3g <= %.3g",
                  check.max_error, tolerance);
    dec.notes.push_back(buf);
  }
}

}  // namespace

DecompositionCheck CheckDecomposition(const Decomposition& dec,
                                      double tolerance) {
  DecompositionCheck out;
  out.exact = dec.exact();
  const BiquadraticForm exact_part =
      Expand(dec.exact_squares, dec.target.m(), dec.target.n());
  if (out.exact) {
    const BiquadraticForm diff = exact_part - dec.target;
    for (const auto& entry : diff.coefficients()) {
      out.max_error = std::max(out.max_error, std::fabs(ToDouble(entry.second)));
    }
    out.ok = diff.is_zero();
    return out;
  }
  for (const NumericBilinearForm& l : dec.numeric_squares) {
    if (l.m != dec.target.m() || l.n != dec.target.n()) {
      throw DimensionError("numeric square dimensions do not match");
    }
  }
  std::map<QuarticMonomial, double> total =
      ExpandNumeric(dec.numeric_squares);
  for (const auto& [mono, c] : exact_part.coefficients()) total[mono] += ToDouble(c);
  for (const auto& [mono, c] : dec.target.coefficients()) total[mono] -= ToDouble(c);
  for (const auto& entry : total) {
    out.max_error = std::max(out.max_error, std::fabs(entry.second));
  }
  out.ok = out.max_error <= tolerance;
  return out;
}

std::array<BilinearForm, 2> C4Identity(int m, int n, int i, int k, int j,
                                       int l) {
  if (i == k || j == l) {
    throw RangeError("C4 identity needs distinct rows and distinct columns");
  }
  BilinearForm first(m, n), second(m, n);
  first.set(i, j, 1);
  first.set(k, l, 1);
  second.set(i, l, 1);
  second.set(k, j, -1);
  return {std::move(first), std::move(second)};
}

std::array<BilinearForm, 4> Hurwitz3x3(int m, int n, std::array<int, 3> rows) {
  if (n != 3) throw RangeError("Hurwitz identity requires n = 3");
  const auto [a, b, c] = rows;
  if (a == b || b == c || a == c) {
    throw RangeError("Hurwitz identity needs three distinct rows");
  }
  std::array<BilinearForm, 4> out{BilinearForm(m, n), BilinearForm(m, n),
                                  BilinearForm(m, n), BilinearForm(m, n)};
  out[0].set(a, 1, 1);
  out[0].set(b, 2, 1);
  out[0].set(c, 3, 1);
  out[1].set(b, 3, 1);
  out[1].set(c, 2, -1);
  out[2].set(c, 1, 1);
  out[2].set(a, 3, -1);
  out[3].set(a, 2, 1);
  out[3].set(b, 1, -1);
  return out;
}

Decomposition DecomposeSimple(const BiquadraticForm& form) {
  if (form.m() != 4 || form.n() != 3) {
    throw DimensionError("simple decomposition is defined for 4x3 forms");
  }
  BipartiteGraph g = FromSimpleForm(form);
  const int e = g.edge_count();
  Decomposition dec{form, {}, {}, "simple", {}};
  auto take = [&](auto&& squares) {
    for (auto& l : squares) dec.exact_squares.push_back(Square{Rational(1), l});
  };
  auto remove_c4 = [&](const C4Witness& w) {
    take(C4Identity(4, 3, w.i, w.k, w.j, w.l));
    for (auto [i, j] : w.edges()) g.RemoveEdge(i, j);
    dec.notes.push_back("C4 identity on " + ToString(w));
  };
  auto remove_k33 = [&](const std::array<int, 3>& rows) {
    take(Hurwitz3x3(4, 3, rows));
    for (int r : rows) {
      for (int j = 1; j <= 3; ++j) g.RemoveEdge(r, j);
    }
    dec.notes.push_back("Hurwitz identity on rows {" + std::to_string(rows[0]) +
                        "," + std::to_string(rows[1]) + "," +
                        std::to_string(rows[2]) + "}");
  };

  dec.notes.push_back("edges: " + std::to_string(e));
  if (e == 8 || e == 9) {
    remove_c4(*FindC4(g));
  } else if (e == 10) {
    if (auto rows = FindK33(g)) {
      remove_k33(*rows);
    } else {
      auto pair = FindTwoDisjointC4(g, Disjointness::kEdge);
      if (!pair) throw Error("internal: 10-edge graph without a C4 pair");
      remove_c4(pair->first);
      remove_c4(pair->second);
    }
  } else if (e >= 11) {
    remove_k33(*FindK33(g));
    if (e == 12) {
      dec.notes.push_back(
          "12 edges: K_{3,3} split extends the documented 1..11-edge cases");
    }
  }
  for (auto [i, j] : g.edges()) {
    dec.exact_squares.push_back(SingleSquare(4, 3, i, j, Rational(1)));
  }
  Finish(dec, 0.0);
  return dec;
}

std::vector<int> DetectYDeficient(const BiquadraticForm& form) {
  std::vector<int> out;
  for (int j0 = 1; j0 <= form.n(); ++j0) {
    bool ok = true;
    for (const auto& [mono, c] : form.coefficients()) {
      if (mono.yj != j0 && mono.yl != j0) continue;
      if (!mono.is_pure_square() || sgn(c) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(j0);
  }
  return out;
}

YDeficientSplit SplitYDeficient(const BiquadraticForm& form, int j0) {
  if (j0 < 1 || j0 > form.n()) {
    throw BoundsError("column " + std::to_string(j0) + " out of range");
  }
  if (form.n() < 2) throw StructureError("splitting needs at least two columns");
  YDeficientSplit split{j0, BiquadraticForm(form.m(), form.n() - 1), {}, {}};
  for (int j = 1; j <= form.n(); ++j) {
    if (j != j0) split.column_map.push_back(j);
  }
  split.weights.assign(form.m(), Rational(0));
  for (const auto& [mono, c] : form.coefficients()) {
    if (mono.yj != j0 && mono.yl != j0) continue;
    if (!mono.is_pure_square()) {
      throw StructureError("column " + std::to_string(j0) +
                           " is coupled by monomial " + ToString(mono));
    }
    if (sgn(c) < 0) {
      throw StructureError("negative coefficient on " + ToString(mono));
    }
    split.weights[mono.xi - 1] = c;
  }
  split.rest = RestrictColumns(form, split.column_map);
  return split;
}

BiquadraticForm Reassemble(const YDeficientSplit& split, int n) {
  BiquadraticForm out(split.rest.m(), n);
  for (const auto& [mono, c] : split.rest.coefficients()) {
    out.AddTerm(QuarticMonomial::Make(mono.xi, mono.xk,
                                      split.column_map[mono.yj - 1],
                                      split.column_map[mono.yl - 1]),
                c);
  }
  for (int i = 1; i <= split.rest.m(); ++i) {
    out.AddTerm(QuarticMonomial::Make(i, i, split.j0, split.j0),
                split.weights[i - 1]);
  }
  return out;
}

Decomposition DecomposeYDeficient(const BiquadraticForm& form, int j0,
                                  const SearchConfig& config,
                                  long denominator_bound) {
  if (form.n() != 3) {
    throw DimensionError("y-deficient decomposition requires n = 3");
  }
  const YDeficientSplit split = SplitYDeficient(form, j0);
  const int m = form.m();
  const int target_rank = m + 1;
  Decomposition dec{form, {}, {}, "ydeficient", {}};
  dec.notes.push_back("split at column y" + std::to_string(j0));

  const BlockResult block =
      DecomposeBlock(split.rest, target_rank, config, denominator_bound);
  dec.notes.push_back(std::to_string(m) + "x2 remainder: " + block.how + ", " +
                      std::to_string(block.exact.size() + block.numeric.size()) +
                      " squares (bound " + std::to_string(target_rank) + ")");
  const std::vector<int> rows = Iota(m);
  for (const Square& s : block.exact) {
    dec.exact_squares.push_back(
        Square{s.weight, Lift(s.form, rows, split.column_map, m, 3)});
  }
  for (const NumericBilinearForm& l : block.numeric) {
    dec.numeric_squares.push_back(Lift(l, rows, split.column_map, m, 3));
  }
  int singles = 0;
  for (int i = 1; i <= m; ++i) {
    if (sgn(split.weights[i - 1]) > 0) {
      dec.exact_squares.push_back(
          SingleSquare(m, 3, i, j0, split.weights[i - 1]));
      ++singles;
    }
  }
  dec.notes.push_back("deficient column: " + std::to_string(singles) +
                      " single squares");
  Finish(dec, config.tolerance);
  return dec;
}

Decomposition DecomposeDiagonalRowSplit(const BiquadraticForm& form,
                                        const SearchConfig& config,
                                        long denominator_bound) {
  if (form.m() != 4 || form.n() != 3) {
    throw DimensionError("row split is defined for 4x3 forms");
  }
  for (const auto& [mono, c] : form.coefficients()) {
    if (!mono.is_pure_square()) {
      throw StructureError("not diagonal: monomial " + ToString(mono));
    }
    if (sgn(c) < 0) {
      throw StructureError("negative coefficient on " + ToString(mono));
    }
  }
  Decomposition dec{form, {}, {}, "rowsplit", {}};
  const std::vector<int> block_rows = {1, 2, 3};
  const BlockResult block = DecomposeBlock(RestrictRows(form, block_rows), 6,
                                           config, denominator_bound);
  dec.notes.push_back(
      "rows 1-3: " + block.how + ", " +
      std::to_string(block.exact.size() + block.numeric.size()) +
      " squares (bound 6)");
  const std::vector<int> cols = Iota(3);
  for (const Square& s : block.exact) {
    dec.exact_squares.push_back(
        Square{s.weight, Lift(s.form, block_rows, cols, 4, 3)});
  }
  for (const NumericBilinearForm& l : block.numeric) {
    dec.numeric_squares.push_back(Lift(l, block_rows, cols, 4, 3));
  }
  int singles = 0;
  for (int j = 1; j <= 3; ++j) {
    const Rational c = form.PureSquareCoefficient(4, j);
    if (sgn(c) > 0) {
      dec.exact_squares.push_back(SingleSquare(4, 3, 4, j, c));
      ++singles;
    }
  }
  dec.notes.push_back("row 4: " + std::to_string(singles) + " single squares");
  Finish(dec, config.tolerance);
  return dec;
}

Strategy ParseStrategy(const std::string& name) {
  if (name == "auto") return Strategy::kAuto;
  if (name == "simple") return Strategy::kSimple;
  if (name == "ydeficient") return Strategy::kYDeficient;
  if (name == "rowsplit") return Strategy::kRowSplit;
  if (name == "gram") return Strategy::kGram;
  throw RangeError("unknown strategy '" + name + "'");
}

std::string ToString(Strategy strategy) {
  switch (strategy) {
    case Strategy::kAuto: return "auto";
    case Strategy::kSimple: return "simple";
    case Strategy::kYDeficient: return "ydeficient";
    case Strategy::kRowSplit: return "rowsplit";
    case Strategy::kGram: return "gram";
  }
  return "auto";
}

namespace {

bool IsSimple(const BiquadraticForm& form) {
  return std::all_of(form.coefficients().begin(), form.coefficients().end(),
                     [](const auto& e) {
                       return e.first.is_pure_square() && e.second == 1;
                     });
}

Decomposition DecomposeGram(const BiquadraticForm& form,
                            const SearchConfig& config,
                            long denominator_bound) {
  const int basis = form.m() * form.n();
  auto bound = MinRankUpperBound(form, basis, config);
  if (!bound) {
    throw SearchFailure("rank search found no representation up to rank " +
                        std::to_string(basis) + " (inconclusive)");
  }
  Decomposition dec{form, {}, {}, "gram", {}};
  dec.notes.push_back("smallest successful search rank: " +
                      std::to_string(bound->rank));
  if (bound->rank == 0) {
    Finish(dec, config.tolerance);
    return dec;
  }
  if (auto exact = Rationalize(bound->factor, form, denominator_bound)) {
    dec.exact_squares = std::move(exact->squares);
    dec.notes.push_back("rationalized with denominators <= " +
                        std::to_string(denominator_bound));
  } else {
    dec.numeric_squares = RowsToBilinear(bound->factor);
    dec.notes.push_back("rationalization failed; numeric squares");
  }
  Finish(dec, config.tolerance);
  return dec;
}

}  // namespace

Decomposition Decompose(const BiquadraticForm& form, Strategy strategy,
                        const SearchConfig& config, long denominator_bound) {
  switch (strategy) {
    case Strategy::kSimple:
      return DecomposeSimple(form);
    case Strategy::kYDeficient: {
      const std::vector<int> cols = DetectYDeficient(form);
      if (cols.empty()) throw StructureError("form is not y-deficient");
      return DecomposeYDeficient(form, cols.back(), config, denominator_bound);
    }
    case Strategy::kRowSplit:
      return DecomposeDiagonalRowSplit(form, config, denominator_bound);
    case Strategy::kGram:
      return DecomposeGram(form, config, denominator_bound);
    case Strategy::kAuto:
      break;
  }
  if (form.m() == 4 && form.n() == 3 && IsSimple(form)) {
    return DecomposeSimple(form);
  }
  if (form.n() == 3) {
    const std::vector<int> cols = DetectYDeficient(form);
    if (!cols.empty()) {
      return DecomposeYDeficient(form, cols.back(), config, denominator_bound);
    }
  }
  if (form.m() == 4 && form.n() == 3 && NonnegativeDiagonal(form)) {
    return DecomposeDiagonalRowSplit(form, config, denominator_bound);
  }
  return DecomposeGram(form, config, denominator_bound);
}

}  // namespace bqsos
