#include "bqsos/decomposition_io.h"

#include <sstream>

#include "bqsos/errors.h"
#include "bqsos/parse.h"

namespace bqsos {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view StripParens(std::string_view s) {
  s = Trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    return Trim(s.substr(1, s.size() - 2));
  }
  return s;
}

Square ParseExactSquare(std::string_view line, int m, int n) {
  if (line.starts_with("sqrt(")) {
    const auto close = line.find(')');
    if (close == std::string_view::npos) {
      throw ParseError("unterminated sqrt(", 0);
    }
    auto weight = ParseRational(Trim(line.substr(5, close - 5)));
    if (!weight || sgn(*weight) <= 0) {
      throw ParseError("sqrt weight must be a positive rational", 5);
    }
    std::string_view rest = Trim(line.substr(close + 1));
    if (!rest.starts_with("*")) throw ParseError("expected '*' after sqrt(...)", close + 1);
    rest = Trim(rest.substr(1));
    if (!(rest.starts_with("(") && rest.ends_with(")"))) {
      throw ParseError("weighted square body must be parenthesized", close + 2);
    }
    return Square{*weight, ParseBilinear(StripParens(rest), m, n)};
  }
  return Square{Rational(1), ParseBilinear(StripParens(line), m, n)};
}

}  // namespace

std::string FormatSquare(const Square& square) {
  if (square.weight == 1) return FormatBilinear(square.form);
  return "sqrt(" + ToString(square.weight) + ")*(" +
         FormatBilinear(square.form) + ")";
}

std::string FormatDecomposition(const Decomposition& dec) {
  std::ostringstream out;
  out << "# strategy: " << dec.strategy << "\n";
  for (const std::string& note : dec.notes) out << "# " << note << "\n";
  out << "target: " << FormatForm(dec.target) << "\n";
  for (const Square& s : dec.exact_squares) out << FormatSquare(s) << "\n";
  for (const NumericBilinearForm& l : dec.numeric_squares) {
    out << "~ " << FormatNumericBilinear(l) << "\n";
  }
  return out.str();
}

Decomposition ParseDecomposition(std::string_view text, int m, int n) {
  Decomposition dec{BiquadraticForm(m, n), {}, {}, "", {}};
  bool have_target = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty()) continue;
    try {
      if (line.front() == '#') {
        const std::string_view body = Trim(line.substr(1));
        if (body.starts_with("strategy:")) {
          dec.strategy = std::string(Trim(body.substr(9)));
        } else {
          dec.notes.emplace_back(body);
        }
      } else if (line.starts_with("target:")) {
        if (have_target) throw ParseError("duplicate target line", 0);
        dec.target = ParseForm(line.substr(7), m, n);
        have_target = true;
      } else if (!have_target) {
        throw ParseError("square before the target line", 0);
      } else if (line.front() == '~') {
        dec.numeric_squares.push_back(
            ParseNumericBilinear(StripParens(line.substr(1)), m, n));
      } else {
        dec.exact_squares.push_back(ParseExactSquare(line, m, n));
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.position());
    }
  }
  if (!have_target) throw ParseError("missing target line", text.size());
  return dec;
}

}  // namespace bqsos
