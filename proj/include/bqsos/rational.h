#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bqsos {

/// Exact scalar used for every coefficient outside the numeric search.
using Rational = mpq_class;

/// Parses `integer ['/' positive-integer]` with an optional leading sign.
/// Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> ParseRational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

/// Returns s >= 0 with s * s == value when value is the square of a
/// rational number.
std::optional<Rational> ExactSqrt(const Rational& value);

/// Last continued-fraction convergent of `value` whose denominator does
/// not exceed `max_denominator`.
Rational BestRationalApproximation(double value, long max_denominator);

}  // namespace bqsos
