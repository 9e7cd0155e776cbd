#pragma once

// Reference implementations used only to cross-check the library. They
// favour obviousness over speed and share no code with src/.

#include <cstdint>
#include <random>
#include <vector>

#include "bqsos/form.h"

namespace bqsos::testing {

inline bool Edge(std::uint64_t mask, int n, int i, int j) {
  return (mask >> ((i - 1) * n + (j - 1))) & 1u;
}

/// Quadruple loop over row and column pairs.
inline bool HasC4Brute(std::uint64_t mask, int m, int n) {
  for (int i = 1; i <= m; ++i)
    for (int k = i + 1; k <= m; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l)
          if (Edge(mask, n, i, j) && Edge(mask, n, i, l) &&
              Edge(mask, n, k, j) && Edge(mask, n, k, l))
            return true;
  return false;
}

inline int PopCount(std::uint64_t mask) {
  int c = 0;
  for (; mask; mask &= mask - 1) ++c;
  return c;
}

/// Largest C4-free edge count over all edge sets.
inline int ZarankiewiczBrute(int m, int n) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
    const int e = PopCount(mask);
    if (e > best && !HasC4Brute(mask, m, n)) best = e;
  }
  return best;
}

inline long Binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Entries p/q with |p| <= 9 and 1 <= q <= 9.
inline std::vector<Rational> RandomRationals(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::vector<Rational> v;
  for (int i = 0; i < count; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    v.push_back(r);
  }
  return v;
}

/// Bilinear form with small integer coefficients, roughly half of them 0.
inline BilinearForm RandomBilinear(std::mt19937_64& rng, int m, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3), keep(0, 1);
  BilinearForm l(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (keep(rng)) l.set(i, j, coeff(rng));
  return l;
}

/// Direct evaluation of sum_k (sum_ij b_ij x_i y_j)^2.
inline Rational SumOfSquaresAt(const std::vector<BilinearForm>& squares,
                               const std::vector<Rational>& x,
                               const std::vector<Rational>& y) {
  Rational total = 0;
  for (const BilinearForm& l : squares) {
    Rational v = 0;
    for (int i = 1; i <= l.m(); ++i)
      for (int j = 1; j <= l.n(); ++j) v += l.at(i, j) * x[i - 1] * y[j - 1];
    total += v * v;
  }
  return total;
}

}  // namespace bqsos::testing
