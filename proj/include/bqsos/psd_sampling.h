#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bqsos/form.h"

namespace bqsos {

struct SamplePoint {
  std::vector<Rational> x;
  std::vector<Rational> y;
  Rational value;
};

/// Evaluates the form at `trials` pseudo-random rational points (entries
/// p/q with |p| <= 9, 1 <= q <= 9) and returns the first point with a
/// negative value. Finding none is evidence, never a proof of PSD.
/// Throws RangeError when trials < 1.
std::optional<SamplePoint> PsdSampleCheck(const BiquadraticForm& form,
                                          int trials, std::uint64_t seed);

}  // namespace bqsos
