#include "bqsos/psd_sampling.h"

#include <random>

#include "bqsos/errors.h"

namespace bqsos {

std::optional<SamplePoint> PsdSampleCheck(const BiquadraticForm& form,
                                          int trials, std::uint64_t seed) {
  if (trials < 1) throw RangeError("trials must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 9);
  auto draw = [&](int count) {
    std::vector<Rational> v;
    v.reserve(count);
    for (int t = 0; t < count; ++t) {
      Rational r(numerator(rng), denominator(rng));
      r.canonicalize();
      v.push_back(r);
    }
    return v;
  };
  for (int t = 0; t < trials; ++t) {
    SamplePoint p{draw(form.m()), draw(form.n()), Rational(0)};
    p.value = Evaluate(form, p.x, p.y);
    if (sgn(p.value) < 0) return p;
  }
  return std::nullopt;
}

}  // namespace bqsos
