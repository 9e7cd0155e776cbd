#pragma once

#include <string>
#include <string_view>

#include "bqsos/form.h"

namespace bqsos {

// Text grammar (whitespace ignored everywhere):
//
//   form     := "0" | [sign] term (sign term)*
//   term     := [rational ['*']] factor ('*' factor)*
//   factor   := ('x' | 'y') integer ['^' integer]
//   rational := integer ['/' positive-integer]
//
// A form term must have x-degree 2 and y-degree 2; a bilinear term must
// have x-degree 1 and y-degree 1. Like terms are merged and zero
// coefficients dropped. Numeric bilinear text additionally accepts
// decimal coefficients such as 0.25 or -1.5e-3.

/// Throws ParseError, DegreeError or BoundsError.
BiquadraticForm ParseForm(std::string_view text, int m, int n);

/// Canonical text, monomials in lexicographic (xi, xk, yj, yl) order.
std::string FormatForm(const BiquadraticForm& form);

BilinearForm ParseBilinear(std::string_view text, int m, int n);
std::string FormatBilinear(const BilinearForm& form);

NumericBilinearForm ParseNumericBilinear(std::string_view text, int m, int n);
std::string FormatNumericBilinear(const NumericBilinearForm& form);

/// A single coefficient-free monomial, e.g. "x1*x4*y2*y3" or "x1^2*y1*y3".
QuarticMonomial ParseMonomial(std::string_view text, int m, int n);

}  // namespace bqsos
