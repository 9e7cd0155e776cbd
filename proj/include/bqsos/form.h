#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bqsos/rational.h"

namespace bqsos {

/// Largest supported x- or y-dimension.
inline constexpr int kMaxDim = 9;

/// Throws BoundsError unless 1 <= m, n <= kMaxDim.
void CheckDimensions(int m, int n);

/// The monomial x_xi x_xk y_yj y_yl, stored canonically (xi <= xk,
/// yj <= yl). Indices are 1-based.
struct QuarticMonomial {
  int xi = 1;
  int xk = 1;
  int yj = 1;
  int yl = 1;

  /// Sorts the index pairs into canonical order.
  static QuarticMonomial Make(int i, int k, int j, int l);

  bool is_pure_square() const { return xi == xk && yj == yl; }
  bool InBounds(int m, int n) const;

  auto operator<=>(const QuarticMonomial&) const = default;
};

/// Text such as "x1*x4*y2*y3" or "x1^2*y1^2".
std::string ToString(const QuarticMonomial& mono);

/// Homogeneous (2, 2)-form in x (m variables) and y (n variables).
///
/// The stored coefficient is the total coefficient of the canonical
/// monomial: 2*x1*x4*y2*y3 is stored as 2 at (1, 4, 2, 3). Zero
/// coefficients are never stored.
class BiquadraticForm {
 public:
  using CoefficientMap = std::map<QuarticMonomial, Rational>;

  BiquadraticForm(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const CoefficientMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }

  /// Zero when the monomial is absent.
  Rational Coefficient(const QuarticMonomial& mono) const;
  Rational PureSquareCoefficient(int i, int j) const {
    return Coefficient(QuarticMonomial::Make(i, i, j, j));
  }

  /// Adds `value` to the coefficient of `mono`, dropping the entry if the
  /// sum vanishes. Throws BoundsError for out-of-range indices.
  void AddTerm(const QuarticMonomial& mono, const Rational& value);

  /// True if every monomial is a pure square x_i^2 y_j^2.
  bool IsDiagonal() const;

  BiquadraticForm& operator+=(const BiquadraticForm& other);
  BiquadraticForm& operator-=(const BiquadraticForm& other);
  BiquadraticForm& operator*=(const Rational& scale);

  friend bool operator==(const BiquadraticForm&,
                         const BiquadraticForm&) = default;

 private:
  int m_;
  int n_;
  CoefficientMap coeffs_;
};

BiquadraticForm operator+(BiquadraticForm a, const BiquadraticForm& b);
BiquadraticForm operator-(BiquadraticForm a, const BiquadraticForm& b);
BiquadraticForm operator*(const Rational& scale, BiquadraticForm form);

/// l = sum b_ij x_i y_j with exact coefficients.
class BilinearForm {
 public:
  BilinearForm(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  const Rational& at(int i, int j) const;
  void set(int i, int j, const Rational& value);
  bool is_zero() const;

  /// Value of l at (x, y).
  Rational Evaluate(std::span<const Rational> x,
                    std::span<const Rational> y) const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  int m_;
  int n_;
  std::vector<Rational> coeffs_;  // row-major, (i-1)*n + (j-1)
};

BilinearForm operator*(const Rational& scale, BilinearForm form);

/// weight * form^2 with weight > 0. A weight that is not a rational square
/// keeps the square exact when the coefficient sqrt(weight) is irrational.
struct Square {
  Rational weight{1};
  BilinearForm form;

  friend bool operator==(const Square&, const Square&) = default;
};

/// Candidate representation target = sum of squares.
struct SOSDecomposition {
  BiquadraticForm target;
  std::vector<Square> squares;
};

/// Exact sum of l_k^2. Throws DimensionError on mixed (m, n); the empty
/// sequence yields the zero form of the given dimensions.
BiquadraticForm Expand(std::span<const BilinearForm> squares, int m, int n);
BiquadraticForm Expand(std::span<const BilinearForm> squares);
BiquadraticForm Expand(std::span<const Square> squares, int m, int n);

/// Wraps each bilinear form as a unit-weight square.
std::vector<Square> AsSquares(std::span<const BilinearForm> forms);

/// Exact value of the form at (x, y). Throws DimensionError on length
/// mismatch.
Rational Evaluate(const BiquadraticForm& form, std::span<const Rational> x,
                  std::span<const Rational> y);

struct VerifyResult {
  bool equal = false;
  /// Expand(squares) - target; the zero form when equal.
  BiquadraticForm difference;
};

VerifyResult VerifyDecomposition(const SOSDecomposition& dec);

/// l = sum b_ij x_i y_j with floating coefficients, as produced by the
/// numeric search.
struct NumericBilinearForm {
  int m = 0;
  int n = 0;
  std::vector<double> coeffs;  // row-major, (i-1)*n + (j-1)

  double at(int i, int j) const { return coeffs[(i - 1) * n + (j - 1)]; }
};

/// Floating expansion of sum l_k^2, keyed by canonical monomial.
std::map<QuarticMonomial, double> ExpandNumeric(
    std::span<const NumericBilinearForm> squares);

}  // namespace bqsos
