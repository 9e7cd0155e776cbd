#pragma once

#include <array>
#include <string>
#include <vector>

#include "bqsos/form.h"
#include "bqsos/gram_search.h"

namespace bqsos {

/// A sum-of-squares representation produced by one of the strategies.
/// Exact squares are verified in rational arithmetic; numeric squares come
/// from the Gram search when rationalization did not succeed.
struct Decomposition {
  BiquadraticForm target;
  std::vector<Square> exact_squares;
  std::vector<NumericBilinearForm> numeric_squares;
  std::string strategy;
  /// Provenance lines, written to decomposition files as comments.
  std::vector<std::string> notes;

  bool exact() const { return numeric_squares.empty(); }
  std::size_t size() const {
    return exact_squares.size() + numeric_squares.size();
  }
};

struct DecompositionCheck {
  bool ok = false;
  bool exact = false;
  /// Largest coefficient mismatch; 0 for an exact match.
  double max_error = 0.0;
};

/// Exact comparison when every square is exact, otherwise the maximum
/// coefficient error of the floating expansion against `tolerance`.
DecompositionCheck CheckDecomposition(const Decomposition& dec,
                                      double tolerance);

/// (x_i y_j + x_k y_l) and (x_i y_l - x_k y_j), whose squares sum to the
/// four pure squares on rows {i, k} and columns {j, l}. Throws RangeError
/// when i == k or j == l.
std::array<BilinearForm, 2> C4Identity(int m, int n, int i, int k, int j,
                                       int l);

/// Four squares summing to x_a^2 + x_b^2 + x_c^2 times y1^2 + y2^2 + y3^2
/// for rows (a, b, c):
///   (x_a y1 + x_b y2 + x_c y3), (x_b y3 - x_c y2),
///   (x_c y1 - x_a y3), (x_a y2 - x_b y1).
/// Throws RangeError on repeated rows or n != 3.
std::array<BilinearForm, 4> Hurwitz3x3(int m, int n, std::array<int, 3> rows);

/// Structural decomposition of a simple 4x3 form with e edges:
///   e <= 7      e single squares
///   e = 8, 9    one C4 (2 squares) plus singles
///   e = 10      K_{3,3} (4) + 1 single, else two edge-disjoint C4s + 2
///   e = 11, 12  K_{3,3} (4) + the remaining singles
/// The result is verified exactly. Throws StructureError for non-simple
/// input and DimensionError unless (m, n) == (4, 3).
Decomposition DecomposeSimple(const BiquadraticForm& form);

/// Every column j0 such that each monomial involving y_j0 is a pure
/// square x_i^2 y_j0^2 with a nonnegative coefficient.
std::vector<int> DetectYDeficient(const BiquadraticForm& form);

/// form = lift(rest) + y_j0^2 * sum_i weights[i-1] * x_i^2.
struct YDeficientSplit {
  int j0 = 0;
  /// Form over x and the other n-1 y-variables.
  BiquadraticForm rest;
  /// rest column c (1-based) is original column column_map[c-1].
  std::vector<int> column_map;
  std::vector<Rational> weights;
};

/// Throws StructureError naming the violating monomial when j0 does not
/// qualify, or when the split would leave no y-variable.
YDeficientSplit SplitYDeficient(const BiquadraticForm& form, int j0);

/// Rebuilds the original m x n form from a split.
BiquadraticForm Reassemble(const YDeficientSplit& split, int n);

/// Split at j0, decompose the m x 2 remainder into at most m + 1 squares
/// (rank search when no structural shortcut applies), then add one square
/// a_i (x_i y_j0)^2 for every positive weight. Requires n == 3. Throws
/// SearchFailure when the search budget is exhausted.
Decomposition DecomposeYDeficient(const BiquadraticForm& form, int j0,
                                  const SearchConfig& config,
                                  long denominator_bound = 1000);

/// Diagonal 4x3 form: rows 1..3 decomposed into at most 6 squares, plus
/// one square per nonzero row-4 term. Throws StructureError for
/// non-diagonal input or negative coefficients.
Decomposition DecomposeDiagonalRowSplit(const BiquadraticForm& form,
                                        const SearchConfig& config,
                                        long denominator_bound = 1000);

enum class Strategy { kAuto, kSimple, kYDeficient, kRowSplit, kGram };

/// Parses "auto", "simple", "ydeficient", "rowsplit", "gram".
Strategy ParseStrategy(const std::string& name);
std::string ToString(Strategy strategy);

/// kAuto tries simple, then y-deficient (largest qualifying column), then
/// row split, then Gram search.
Decomposition Decompose(const BiquadraticForm& form, Strategy strategy,
                        const SearchConfig& config,
                        long denominator_bound = 1000);

}  // namespace bqsos
