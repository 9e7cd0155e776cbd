#include "bqsos/parse.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "bqsos/errors.h"

namespace bqsos {

namespace {

struct Factor {
  char var;
  int index;
  int exponent;
  std::size_t pos;
};

struct Term {
  bool negative = false;
  std::string coeff;  // empty means 1
  std::vector<Factor> factors;
  std::size_t pos = 0;
};

// Scanner over the input with whitespace removed; positions map back to
// the original text.
class TermScanner {
 public:
  TermScanner(std::string_view text, bool decimal) : decimal_(decimal) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        positions_.push_back(i);
      }
    }
    end_pos_ = text.size();
  }

  bool IsLiteralZero() const {
    return chars_.size() == 1 && chars_[0] == '0';
  }

  std::vector<Term> ScanSum() {
    std::vector<Term> terms;
    if (chars_.empty()) throw ParseError("empty expression", end_pos_);
    bool negative = false;
    if (Peek() == '+' || Peek() == '-') negative = Next() == '-';
    terms.push_back(ScanTerm(negative));
    while (!AtEnd()) {
      const char c = Peek();
      if (c != '+' && c != '-') {
        throw ParseError(std::string("expected '+' or '-', found '") + c +
                             "'",
                         Pos());
      }
      Next();
      terms.push_back(ScanTerm(c == '-'));
    }
    return terms;
  }

  Term ScanSingleTerm() {
    if (chars_.empty()) throw ParseError("empty expression", end_pos_);
    Term t = ScanTerm(false);
    if (!AtEnd()) throw ParseError("unexpected trailing input", Pos());
    return t;
  }

 private:
  bool AtEnd() const { return cur_ >= chars_.size(); }
  char Peek() const { return AtEnd() ? '\0' : chars_[cur_]; }
  char Next() { return chars_[cur_++]; }
  std::size_t Pos() const {
    return AtEnd() ? end_pos_ : positions_[cur_];
  }

  static bool IsDigit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  std::string Digits() {
    std::string out;
    while (!AtEnd() && IsDigit(Peek())) out.push_back(Next());
    return out;
  }

  std::string Coefficient() {
    std::string out = Digits();
    if (decimal_) {
      if (Peek() == '.') {
        out.push_back(Next());
        out += Digits();
      }
      if (!out.empty() && (Peek() == 'e' || Peek() == 'E')) {
        out.push_back(Next());
        if (Peek() == '+' || Peek() == '-') out.push_back(Next());
        const std::string exp = Digits();
        if (exp.empty()) throw ParseError("malformed exponent", Pos());
        out += exp;
      }
    } else if (!out.empty() && Peek() == '/') {
      out.push_back(Next());
      const std::size_t at = Pos();
      const std::string den = Digits();
      if (den.empty()) throw ParseError("expected denominator", at);
      out += den;
    }
    return out;
  }

  Factor ScanFactor() {
    const std::size_t at = Pos();
    const char var = Peek();
    if (var != 'x' && var != 'y') {
      throw ParseError(AtEnd() ? std::string("expected variable")
                               : std::string("expected variable, found '") +
                                     var + "'",
                       at);
    }
    Next();
    const std::size_t idx_at = Pos();
    const std::string idx = Digits();
    if (idx.empty()) throw ParseError("expected variable index", idx_at);
    int exponent = 1;
    if (Peek() == '^') {
      Next();
      const std::size_t exp_at = Pos();
      const std::string exp = Digits();
      if (exp.empty()) throw ParseError("expected exponent", exp_at);
      exponent = std::stoi(exp);
      if (exponent < 1) throw ParseError("exponent must be positive", exp_at);
    }
    return Factor{var, std::stoi(idx), exponent, at};
  }

  Term ScanTerm(bool negative) {
    Term t;
    t.negative = negative;
    t.pos = Pos();
    if (AtEnd()) throw ParseError("expected term", Pos());
    if (IsDigit(Peek()) || (decimal_ && Peek() == '.')) {
      t.coeff = Coefficient();
      if (Peek() == '*') Next();
      if (AtEnd() || Peek() == '+' || Peek() == '-') {
        throw DegreeError("constant term has degree (0, 0) at position " +
                          std::to_string(t.pos));
      }
    }
    t.factors.push_back(ScanFactor());
    while (Peek() == '*') {
      Next();
      t.factors.push_back(ScanFactor());
    }
    return t;
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_pos_ = 0;
  std::size_t cur_ = 0;
  bool decimal_;
};

struct Indices {
  std::vector<int> x;
  std::vector<int> y;
};

Indices CollectIndices(const Term& t, int m, int n) {
  Indices out;
  for (const Factor& f : t.factors) {
    const int bound = f.var == 'x' ? m : n;
    if (f.index < 1 || f.index > bound) {
      throw BoundsError(std::string(1, f.var) + std::to_string(f.index) +
                        " outside declared bound " + std::to_string(bound) +
                        " at position " + std::to_string(f.pos));
    }
    auto& list = f.var == 'x' ? out.x : out.y;
    // Exponents are bounded so that absurd powers are reported as degree
    // errors without allocating.
    for (int e = 0; e < f.exponent && list.size() < 8; ++e) {
      list.push_back(f.index);
    }
  }
  return out;
}

Rational ExactCoefficient(const Term& t) {
  Rational c(1);
  if (!t.coeff.empty()) {
    auto parsed = ParseRational(t.coeff);
    if (!parsed) throw ParseError("malformed rational '" + t.coeff + "'", t.pos);
    c = *parsed;
  }
  return t.negative ? Rational(-c) : c;
}

double NumericCoefficient(const Term& t) {
  double c = 1.0;
  if (!t.coeff.empty()) {
    const char* begin = t.coeff.data();
    const char* end = begin + t.coeff.size();
    auto [ptr, ec] = std::from_chars(begin, end, c);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("malformed number '" + t.coeff + "'", t.pos);
    }
  }
  return t.negative ? -c : c;
}

std::string DegreeText(const Indices& idx) {
  return "(" + std::to_string(idx.x.size()) + ", " +
         std::to_string(idx.y.size()) + ")";
}

QuarticMonomial TermMonomial(const Term& t, int m, int n) {
  const Indices idx = CollectIndices(t, m, n);
  if (idx.x.size() != 2 || idx.y.size() != 2) {
    throw DegreeError("term at position " + std::to_string(t.pos) +
                      " has degree " + DegreeText(idx) +
                      ", expected (2, 2)");
  }
  return QuarticMonomial::Make(idx.x[0], idx.x[1], idx.y[0], idx.y[1]);
}

std::pair<int, int> BilinearIndex(const Term& t, int m, int n) {
  const Indices idx = CollectIndices(t, m, n);
  if (idx.x.size() != 1 || idx.y.size() != 1) {
    throw DegreeError("term at position " + std::to_string(t.pos) +
                      " has degree " + DegreeText(idx) +
                      ", expected (1, 1)");
  }
  return {idx.x[0], idx.y[0]};
}

// Appends " + c*body" / " - c*body" (or a leading form) to out.
void AppendTerm(std::string& out, const Rational& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mag != 1) out += ToString(mag) + "*";
  out += body;
}

std::string BilinearBody(int i, int j) {
  return "x" + std::to_string(i) + "*y" + std::to_string(j);
}

}  // namespace

BiquadraticForm ParseForm(std::string_view text, int m, int n) {
  BiquadraticForm form(m, n);
  TermScanner scanner(text, false);
  if (scanner.IsLiteralZero()) return form;
  for (const Term& t : scanner.ScanSum()) {
    form.AddTerm(TermMonomial(t, m, n), ExactCoefficient(t));
  }
  return form;
}

std::string FormatForm(const BiquadraticForm& form) {
  std::string out;
  for (const auto& [mono, c] : form.coefficients()) {
    AppendTerm(out, c, ToString(mono));
  }
  return out.empty() ? "0" : out;
}

BilinearForm ParseBilinear(std::string_view text, int m, int n) {
  BilinearForm form(m, n);
  TermScanner scanner(text, false);
  if (scanner.IsLiteralZero()) return form;
  for (const Term& t : scanner.ScanSum()) {
    auto [i, j] = BilinearIndex(t, m, n);
    form.set(i, j, form.at(i, j) + ExactCoefficient(t));
  }
  return form;
}

std::string FormatBilinear(const BilinearForm& form) {
  std::string out;
  for (int i = 1; i <= form.m(); ++i) {
    for (int j = 1; j <= form.n(); ++j) {
      if (sgn(form.at(i, j)) != 0) {
        AppendTerm(out, form.at(i, j), BilinearBody(i, j));
      }
    }
  }
  return out.empty() ? "0" : out;
}

NumericBilinearForm ParseNumericBilinear(std::string_view text, int m,
                                         int n) {
  CheckDimensions(m, n);
  NumericBilinearForm form{m, n, std::vector<double>(m * n, 0.0)};
  TermScanner scanner(text, true);
  if (scanner.IsLiteralZero()) return form;
  for (const Term& t : scanner.ScanSum()) {
    auto [i, j] = BilinearIndex(t, m, n);
    form.coeffs[(i - 1) * n + (j - 1)] += NumericCoefficient(t);
  }
  return form;
}

std::string FormatNumericBilinear(const NumericBilinearForm& form) {
  std::string out;
  char buf[64];
  for (int i = 1; i <= form.m; ++i) {
    for (int j = 1; j <= form.n; ++j) {
      const double c = form.at(i, j);
      if (c == 0.0) continue;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::snprintf(buf, sizeof buf, "%.17g", std::fabs(c));
      out += buf;
      out += "*" + BilinearBody(i, j);
    }
  }
  return out.empty() ? "0" : out;
}

QuarticMonomial ParseMonomial(std::string_view text, int m, int n) {
  TermScanner scanner(text, false);
  const Term t = scanner.ScanSingleTerm();
  if (!t.coeff.empty()) {
    throw ParseError("monomial must not carry a coefficient", t.pos);
  }
  return TermMonomial(t, m, n);
}

}  // namespace bqsos
