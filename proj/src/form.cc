#include "bqsos/form.h"

#include <algorithm>
#include <utility>

#include "bqsos/errors.h"

namespace bqsos {

void CheckDimensions(int m, int n) {
  if (m < 1 || n < 1 || m > kMaxDim || n > kMaxDim) {
    throw BoundsError("dimensions (" + std::to_string(m) + ", " +
                      std::to_string(n) + ") outside 1.." +
                      std::to_string(kMaxDim));
  }
}

QuarticMonomial QuarticMonomial::Make(int i, int k, int j, int l) {
  if (i > k) std::swap(i, k);
  if (j > l) std::swap(j, l);
  return QuarticMonomial{i, k, j, l};
}

bool QuarticMonomial::InBounds(int m, int n) const {
  return xi >= 1 && xk <= m && xi <= xk && yj >= 1 && yl <= n && yj <= yl;
}

std::string ToString(const QuarticMonomial& mono) {
  auto pair = [](char var, int a, int b) {
    if (a == b) return std::string(1, var) + std::to_string(a) + "^2";
    return std::string(1, var) + std::to_string(a) + "*" + var +
           std::to_string(b);
  };
  return pair('x', mono.xi, mono.xk) + "*" + pair('y', mono.yj, mono.yl);
}

BiquadraticForm::BiquadraticForm(int m, int n) : m_(m), n_(n) {
  CheckDimensions(m, n);
}

Rational BiquadraticForm::Coefficient(const QuarticMonomial& mono) const {
  auto it = coeffs_.find(mono);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BiquadraticForm::AddTerm(const QuarticMonomial& mono,
                              const Rational& value) {
  if (!mono.InBounds(m_, n_)) {
    throw BoundsError("monomial " + ToString(mono) + " outside (" +
                      std::to_string(m_) + ", " + std::to_string(n_) + ")");
  }
  Rational v = value;
  v.canonicalize();
  if (sgn(v) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(mono, v);
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

bool BiquadraticForm::IsDiagonal() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& entry) {
    return entry.first.is_pure_square();
  });
}

BiquadraticForm& BiquadraticForm::operator+=(const BiquadraticForm& other) {
  if (m_ != other.m_ || n_ != other.n_) {
    throw DimensionError("adding forms of different dimensions");
  }
  for (const auto& [mono, value] : other.coeffs_) AddTerm(mono, value);
  return *this;
}

BiquadraticForm& BiquadraticForm::operator-=(const BiquadraticForm& other) {
  if (m_ != other.m_ || n_ != other.n_) {
    throw DimensionError("subtracting forms of different dimensions");
  }
  for (const auto& [mono, value] : other.coeffs_) AddTerm(mono, -value);
  return *this;
}

BiquadraticForm& BiquadraticForm::operator*=(const Rational& scale) {
  if (sgn(scale) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& entry : coeffs_) entry.second *= scale;
  return *this;
}

BiquadraticForm operator+(BiquadraticForm a, const BiquadraticForm& b) {
  a += b;
  return a;
}

BiquadraticForm operator-(BiquadraticForm a, const BiquadraticForm& b) {
  a -= b;
  return a;
}

BiquadraticForm operator*(const Rational& scale, BiquadraticForm form) {
  form *= scale;
  return form;
}

BilinearForm::BilinearForm(int m, int n)
    : m_(m), n_(n), coeffs_(static_cast<std::size_t>(m * n)) {
  CheckDimensions(m, n);
}

const Rational& BilinearForm::at(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) {
    throw BoundsError("bilinear index out of range");
  }
  return coeffs_[(i - 1) * n_ + (j - 1)];
}

void BilinearForm::set(int i, int j, const Rational& value) {
  if (i < 1 || i > m_ || j < 1 || j > n_) {
    throw BoundsError("bilinear index (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") out of range");
  }
  Rational& slot = coeffs_[(i - 1) * n_ + (j - 1)];
  slot = value;
  slot.canonicalize();
}

bool BilinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

Rational BilinearForm::Evaluate(std::span<const Rational> x,
                                std::span<const Rational> y) const {
  if (x.size() != static_cast<std::size_t>(m_) ||
      y.size() != static_cast<std::size_t>(n_)) {
    throw DimensionError("point does not match bilinear form dimensions");
  }
  Rational total = 0;
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      const Rational& c = coeffs_[(i - 1) * n_ + (j - 1)];
      if (sgn(c) != 0) total += c * x[i - 1] * y[j - 1];
    }
  }
  return total;
}

BilinearForm operator*(const Rational& scale, BilinearForm form) {
  for (int i = 1; i <= form.m(); ++i) {
    for (int j = 1; j <= form.n(); ++j) form.set(i, j, scale * form.at(i, j));
  }
  return form;
}

namespace {

void AccumulateSquare(const BilinearForm& l, const Rational& weight,
                      BiquadraticForm& out) {
  const int m = l.m();
  const int n = l.n();
  // Each unordered pair of basis monomials contributes once on the
  // diagonal and twice off it.
  for (int a = 0; a < m * n; ++a) {
    const int i = a / n + 1;
    const int j = a % n + 1;
    const Rational& ca = l.at(i, j);
    if (sgn(ca) == 0) continue;
    out.AddTerm(QuarticMonomial::Make(i, i, j, j), weight * ca * ca);
    for (int b = a + 1; b < m * n; ++b) {
      const int k = b / n + 1;
      const int q = b % n + 1;
      const Rational& cb = l.at(k, q);
      if (sgn(cb) == 0) continue;
      out.AddTerm(QuarticMonomial::Make(i, k, j, q), 2 * weight * ca * cb);
    }
  }
}

}  // namespace

BiquadraticForm Expand(std::span<const BilinearForm> squares, int m, int n) {
  BiquadraticForm out(m, n);
  for (const BilinearForm& l : squares) {
    if (l.m() != m || l.n() != n) {
      throw DimensionError("square dimensions do not match");
    }
    AccumulateSquare(l, Rational(1), out);
  }
  return out;
}

BiquadraticForm Expand(std::span<const BilinearForm> squares) {
  if (squares.empty()) {
    throw DimensionError("cannot infer dimensions of an empty expansion");
  }
  return Expand(squares, squares.front().m(), squares.front().n());
}

BiquadraticForm Expand(std::span<const Square> squares, int m, int n) {
  BiquadraticForm out(m, n);
  for (const Square& s : squares) {
    if (s.form.m() != m || s.form.n() != n) {
      throw DimensionError("square dimensions do not match");
    }
    AccumulateSquare(s.form, s.weight, out);
  }
  return out;
}

std::vector<Square> AsSquares(std::span<const BilinearForm> forms) {
  std::vector<Square> out;
  out.reserve(forms.size());
  for (const BilinearForm& f : forms) out.push_back(Square{Rational(1), f});
  return out;
}

Rational Evaluate(const BiquadraticForm& form, std::span<const Rational> x,
                  std::span<const Rational> y) {
  if (x.size() != static_cast<std::size_t>(form.m()) ||
      y.size() != static_cast<std::size_t>(form.n())) {
    throw DimensionError("point of length (" + std::to_string(x.size()) +
                         ", " + std::to_string(y.size()) +
                         ") for a form of dimensions (" +
                         std::to_string(form.m()) + ", " +
                         std::to_string(form.n()) + ")");
  }
  Rational total = 0;
  for (const auto& [mono, c] : form.coefficients()) {
    total += c * x[mono.xi - 1] * x[mono.xk - 1] * y[mono.yj - 1] *
             y[mono.yl - 1];
  }
  return total;
}

VerifyResult VerifyDecomposition(const SOSDecomposition& dec) {
  const BiquadraticForm expanded =
      Expand(dec.squares, dec.target.m(), dec.target.n());
  BiquadraticForm difference = expanded - dec.target;
  const bool equal = difference.is_zero();
  return VerifyResult{equal, std::move(difference)};
}

std::map<QuarticMonomial, double> ExpandNumeric(
    std::span<const NumericBilinearForm> squares) {
  std::map<QuarticMonomial, double> out;
  for (const NumericBilinearForm& l : squares) {
    const int m = l.m;
    const int n = l.n;
    for (int a = 0; a < m * n; ++a) {
      const double ca = l.coeffs[a];
      if (ca == 0.0) continue;
      const int i = a / n + 1;
      const int j = a % n + 1;
      out[QuarticMonomial::Make(i, i, j, j)] += ca * ca;
      for (int b = a + 1; b < m * n; ++b) {
        const double cb = l.coeffs[b];
        if (cb == 0.0) continue;
        out[QuarticMonomial::Make(i, b / n + 1, j, b % n + 1)] +=
            2.0 * ca * cb;
      }
    }
  }
  return out;
}

}  // namespace bqsos
