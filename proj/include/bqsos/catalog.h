#pragma once

#include <vector>

#include "bqsos/form.h"

namespace bqsos {

/// The simple 4x3 forms P_{4,3,s} for s = 1..7: unit pure squares on the
/// edges (1,1), (2,2), (3,3), (1,2), (2,3), (3,1), (4,1) taken in that
/// order. Throws RangeError outside 1..7.
BiquadraticForm SimpleFamily(int s);

/// Simple form on the given (row, column) edges.
BiquadraticForm SimpleForm(int m, int n,
                           const std::vector<std::pair<int, int>>& edges);

/// sum_{i<=m, j<=n} x_i^2 y_j^2.
BiquadraticForm AllOnesForm(int m, int n);

/// The 4x3 form P_{4,3,7} + (x4*y2 + x1*y3)^2, which needs eight squares.
BiquadraticForm EightSquareForm();

/// The explicit eight-square representation of EightSquareForm().
std::vector<BilinearForm> EightSquareWitness();

/// P_{4,3,7} + (x1*y3 + x2*y1)^2, a perturbation that keeps rank 7.
BiquadraticForm RankPreservingPerturbation();

/// Diagonal 4x3 form with rows 1..3 weighted by
///   1 2 1 / 3 7 1 / 1 1 2
/// and row 4 weighted by (1, 1, 1).
BiquadraticForm WeightedDiagonalExample();

/// 3x3 form with all nine unit pure squares and the cross terms
/// 2*x1*x2*y1*y2 + 2*x2*x3*y2*y3 + 2*x1*x3*y1*y3.
BiquadraticForm FullyCoupledExample();

}  // namespace bqsos
