#pragma once

#include <string>
#include <string_view>

#include "bqsos/decomposer.h"

namespace bqsos {

// Decomposition file format, one item per line:
//
//   # strategy: <name>            provenance comments (optional)
//   # <free text>
//   target: <form>
//   <bilinear>                    exact square l^2
//   sqrt(<rational>)*(<bilinear>) exact square w * l^2
//   ~ <numeric bilinear>          floating square
//
// Blank lines are ignored. Dimensions are supplied by the reader.

std::string FormatDecomposition(const Decomposition& dec);

/// Throws ParseError (with the 1-based line number in the message),
/// DegreeError or BoundsError.
Decomposition ParseDecomposition(std::string_view text, int m, int n);

/// One square line without the trailing newline.
std::string FormatSquare(const Square& square);

}  // namespace bqsos
