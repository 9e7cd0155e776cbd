#include "bqsos/rational.h"

#include <cctype>
#include <cmath>

namespace bqsos {

namespace {

bool AllDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : text.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational value(n, d);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string ToString(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

double ToDouble(const Rational& value) { return value.get_d(); }

std::optional<Rational> ExactSqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class num = value.get_num();
  const mpz_class den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  return root;
}

Rational BestRationalApproximation(double value, long max_denominator) {
  if (max_denominator < 1) max_denominator = 1;
  if (!std::isfinite(value)) return Rational(0);
  const bool negative = value < 0;
  double x = std::fabs(value);
  // Convergents h/k of the continued fraction expansion.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    x = 1.0 / frac;
    const double a_floor = std::floor(x);
    if (a_floor > 1e15) break;
    const mpz_class a = static_cast<long>(a_floor);
    const mpz_class h_next = a * h + h_prev;
    const mpz_class k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = x - a_floor;
  }
  Rational result(h, k);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace bqsos
