#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bqsos/form.h"

namespace bqsos {

/// One unordered Gram position {a, b} (0-based basis indices, a <= b) with
/// its multiplicity in the expansion z^T G z: 1 on the diagonal, 2 off it.
struct GramEntry {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
};

/// sum over entries of multiplicity * G[a][b] == target.
struct GramConstraint {
  QuarticMonomial monomial;
  std::vector<GramEntry> entries;
  Rational target;
};

/// Coefficient-matching system for P = z^T G z over the basis
/// z = (x_i y_j), ordered row-major: index (i-1)*n + (j-1).
class GramSystem {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  int basis_size() const { return m_ * n_; }
  std::pair<int, int> basis(int index) const {
    return {index / n_ + 1, index % n_ + 1};
  }
  const std::vector<GramConstraint>& constraints() const {
    return constraints_;
  }
  /// Index of the constraint that owns Gram position {a, b}.
  int ConstraintOf(int a, int b) const;

  friend GramSystem BuildGramSystem(const BiquadraticForm& form);

 private:
  GramSystem(int m, int n) : m_(m), n_(n) {}

  int m_;
  int n_;
  std::vector<GramConstraint> constraints_;
  std::vector<int> owner_;  // basis_size^2, symmetric
};

/// One constraint per canonical monomial in lexicographic order; absent
/// monomials get target 0.
GramSystem BuildGramSystem(const BiquadraticForm& form);

struct SearchConfig {
  int max_restarts = 200;
  int max_iterations = 5000;
  /// Success threshold on the maximum absolute constraint residual.
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  // Levenberg-Marquardt damping schedule.
  double initial_damping = 1e-3;
  double damping_increase = 8.0;
  double damping_decrease = 0.25;
  double max_damping = 1e10;
  /// A restart is abandoned when the cost has not dropped by the factor
  /// stall_ratio over the last stall_window iterations.
  int stall_window = 40;
  double stall_ratio = 0.999;

  /// Throws RangeError on a non-positive tolerance or restart count.
  void Validate() const;
};

/// Rank-r factor V (r x mn); column a is the Gram vector of basis monomial
/// a, and G = V^T V.
struct FactorMatrix {
  int m = 0;
  int n = 0;
  Eigen::MatrixXd columns;

  int rank() const { return static_cast<int>(columns.rows()); }
};

/// Maximum absolute residual of G = V^T V against the system, computed
/// directly from the factor.
double MaxResidual(const GramSystem& system, const FactorMatrix& factor);

/// Random-restart Levenberg-Marquardt on the residual sum of squares over
/// rank-r factors. Restart t is initialised from seed + t with entries
/// uniform in [-1, 1]; the first success by restart index is returned.
/// nullopt is inconclusive: it never proves that rank r is infeasible.
std::optional<FactorMatrix> LowRankSearch(const GramSystem& system, int r,
                                          const SearchConfig& config);

/// Single run from the given starting factor.
std::optional<FactorMatrix> RefineFactor(const GramSystem& system,
                                         const FactorMatrix& start,
                                         const SearchConfig& config);

struct RankBound {
  int rank = 0;
  FactorMatrix factor;
};

/// Tries r = 1, 2, ..., r_max in order and returns the first success. The
/// zero form reports rank 0 without searching.
std::optional<RankBound> MinRankUpperBound(const BiquadraticForm& form,
                                           int r_max,
                                           const SearchConfig& config);

/// Row k of the factor as the bilinear form l_k.
std::vector<NumericBilinearForm> RowsToBilinear(const FactorMatrix& factor);

/// Rounds every entry to a continued-fraction convergent with denominator
/// at most `denominator_bound` and returns the exact decomposition only
/// when it reproduces `target` exactly. All-zero rows are dropped.
std::optional<SOSDecomposition> Rationalize(const FactorMatrix& factor,
                                            const BiquadraticForm& target,
                                            long denominator_bound);

/// Exact factor whose rows are the given bilinear forms.
FactorMatrix FactorFromSquares(std::span<const BilinearForm> squares);

/// Exact Gram matrix sum_k w_k b_k b_k^T, row-major over the basis.
std::vector<Rational> GramFromSquares(std::span<const Square> squares, int m,
                                      int n);

/// True when the exact Gram matrix meets every constraint exactly.
bool SatisfiesExactly(const GramSystem& system,
                      std::span<const Rational> gram);

/// Header "r mn", then r rows of mn floats.
std::string FormatFactor(const FactorMatrix& factor);
/// Throws ParseError on malformed text or a basis size other than m*n.
FactorMatrix ParseFactor(std::string_view text, int m, int n);

}  // namespace bqsos
