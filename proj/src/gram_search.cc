#include "bqsos/gram_search.h"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <Eigen/Cholesky>

#include "bqsos/errors.h"

namespace bqsos {

int GramSystem::ConstraintOf(int a, int b) const {
  const int size = basis_size();
  if (a < 0 || b < 0 || a >= size || b >= size) {
    throw BoundsError("Gram position out of range");
  }
  return owner_[a * size + b];
}

GramSystem BuildGramSystem(const BiquadraticForm& form) {
  const int m = form.m();
  const int n = form.n();
  GramSystem system(m, n);
  const int size = m * n;
  system.owner_.assign(size * size, -1);
  auto index = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  auto entry = [](int a, int b, int mult) {
    return a <= b ? GramEntry{a, b, mult} : GramEntry{b, a, mult};
  };
  for (int i = 1; i <= m; ++i) {
    for (int k = i; k <= m; ++k) {
      for (int j = 1; j <= n; ++j) {
        for (int l = j; l <= n; ++l) {
          GramConstraint c;
          c.monomial = QuarticMonomial{i, k, j, l};
          c.target = form.Coefficient(c.monomial);
          if (i == k && j == l) {
            c.entries.push_back(entry(index(i, j), index(i, j), 1));
          } else if (i == k || j == l) {
            c.entries.push_back(entry(index(i, j), index(k, l), 2));
          } else {
            c.entries.push_back(entry(index(i, j), index(k, l), 2));
            c.entries.push_back(entry(index(i, l), index(k, j), 2));
          }
          const int id = static_cast<int>(system.constraints_.size());
          for (const GramEntry& e : c.entries) {
            system.owner_[e.a * size + e.b] = id;
            system.owner_[e.b * size + e.a] = id;
          }
          system.constraints_.push_back(std::move(c));
        }
      }
    }
  }
  return system;
}

void SearchConfig::Validate() const {
  if (!(tolerance > 0)) throw RangeError("search tolerance must be positive");
  if (max_restarts < 1) throw RangeError("search needs at least one restart");
  if (max_iterations < 1) {
    throw RangeError("search needs at least one iteration");
  }
}

namespace {

// Flattened copy of the system for the inner loop.
struct DenseSystem {
  int size = 0;
  std::vector<GramEntry> entries;
  std::vector<int> entry_owner;
  Eigen::VectorXd targets;

  explicit DenseSystem(const GramSystem& system) : size(system.basis_size()) {
    const auto& cs = system.constraints();
    targets.resize(static_cast<Eigen::Index>(cs.size()));
    for (std::size_t c = 0; c < cs.size(); ++c) {
      targets[static_cast<Eigen::Index>(c)] = ToDouble(cs[c].target);
      for (const GramEntry& e : cs[c].entries) {
        entries.push_back(e);
        entry_owner.push_back(static_cast<int>(c));
      }
    }
  }

  void Residuals(const Eigen::MatrixXd& v, Eigen::VectorXd& out) const {
    out = -targets;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const GramEntry& g = entries[e];
      out[entry_owner[e]] += g.multiplicity * v.col(g.a).dot(v.col(g.b));
    }
  }

  void Jacobian(const Eigen::MatrixXd& v, Eigen::MatrixXd& jac) const {
    const Eigen::Index r = v.rows();
    jac.setZero(targets.size(), r * size);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const GramEntry& g = entries[e];
      const int c = entry_owner[e];
      if (g.a == g.b) {
        jac.block(c, g.a * r, 1, r) += 2.0 * v.col(g.a).transpose();
      } else {
        jac.block(c, g.a * r, 1, r) += g.multiplicity * v.col(g.b).transpose();
        jac.block(c, g.b * r, 1, r) += g.multiplicity * v.col(g.a).transpose();
      }
    }
  }
};

// Levenberg-Marquardt on 0.5 * |R(V)|^2. Returns true when the maximum
// residual reaches the tolerance.
bool Minimize(const DenseSystem& sys, Eigen::MatrixXd& v,
              const SearchConfig& config) {
  const Eigen::Index r = v.rows();
  Eigen::VectorXd res, trial_res, grad, step;
  Eigen::MatrixXd jac, hess, lhs;
  Eigen::MatrixXd trial(r, sys.size);
  sys.Residuals(v, res);
  double cost = 0.5 * res.squaredNorm();
  double damping = config.initial_damping;
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(config.max_iterations));
  int polish = -1;

  for (int it = 0; it < config.max_iterations; ++it) {
    const double max_res = res.size() ? res.cwiseAbs().maxCoeff() : 0.0;
    if (max_res <= config.tolerance) {
      // Keep refining briefly for margin below the tolerance.
      if (polish < 0) polish = 0;
      if (max_res <= 1e-4 * config.tolerance || polish >= 4) return true;
      ++polish;
    }
    sys.Jacobian(v, jac);
    hess.noalias() = jac.transpose() * jac;
    grad.noalias() = jac.transpose() * res;
    if (grad.lpNorm<Eigen::Infinity>() < 1e-300) return polish >= 0;

    bool accepted = false;
    while (!accepted) {
      lhs = hess;
      lhs.diagonal().array() += damping;
      step = lhs.ldlt().solve(-grad);
      trial = v + Eigen::Map<const Eigen::MatrixXd>(step.data(), r, sys.size);
      sys.Residuals(trial, trial_res);
      const double trial_cost = 0.5 * trial_res.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        v.swap(trial);
        res.swap(trial_res);
        cost = trial_cost;
        damping = std::max(damping * config.damping_decrease, 1e-15);
        accepted = true;
      } else {
        damping *= config.damping_increase;
        if (damping > config.max_damping) return polish >= 0;
      }
    }
    history.push_back(cost);
    const int w = config.stall_window;
    if (polish < 0 && w > 0 && static_cast<int>(history.size()) > w &&
        cost > config.stall_ratio * history[history.size() - 1 - w]) {
      return false;
    }
  }
  return (res.size() ? res.cwiseAbs().maxCoeff() : 0.0) <= config.tolerance;
}

}  // namespace

double MaxResidual(const GramSystem& system, const FactorMatrix& factor) {
  if (factor.columns.cols() != system.basis_size()) {
    throw DimensionError("factor basis size does not match the system");
  }
  const Eigen::MatrixXd gram = factor.columns.transpose() * factor.columns;
  double worst = 0.0;
  for (const GramConstraint& c : system.constraints()) {
    double sum = -ToDouble(c.target);
    for (const GramEntry& e : c.entries) sum += e.multiplicity * gram(e.a, e.b);
    worst = std::max(worst, std::fabs(sum));
  }
  return worst;
}

std::optional<FactorMatrix> RefineFactor(const GramSystem& system,
                                         const FactorMatrix& start,
                                         const SearchConfig& config) {
  config.Validate();
  if (start.columns.cols() != system.basis_size() || start.rank() < 1) {
    throw DimensionError("starting factor does not match the system");
  }
  const DenseSystem sys(system);
  FactorMatrix factor{system.m(), system.n(), start.columns};
  Minimize(sys, factor.columns, config);
  if (MaxResidual(system, factor) <= config.tolerance) return factor;
  return std::nullopt;
}

std::optional<FactorMatrix> LowRankSearch(const GramSystem& system, int r,
                                          const SearchConfig& config) {
  config.Validate();
  if (r < 1 || r > system.basis_size()) {
    throw RangeError("rank " + std::to_string(r) + " outside 1.." +
                     std::to_string(system.basis_size()));
  }
  const DenseSystem sys(system);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (int t = 0; t < config.max_restarts; ++t) {
    std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(t));
    FactorMatrix factor{system.m(), system.n(),
                        Eigen::MatrixXd(r, system.basis_size())};
    for (Eigen::Index c = 0; c < factor.columns.cols(); ++c) {
      for (Eigen::Index k = 0; k < r; ++k) factor.columns(k, c) = uniform(rng);
    }
    Minimize(sys, factor.columns, config);
    if (MaxResidual(system, factor) <= config.tolerance) return factor;
  }
  return std::nullopt;
}

std::optional<RankBound> MinRankUpperBound(const BiquadraticForm& form,
                                           int r_max,
                                           const SearchConfig& config) {
  const GramSystem system = BuildGramSystem(form);
  if (r_max > system.basis_size()) {
    throw RangeError("r_max exceeds the basis size");
  }
  if (form.is_zero()) {
    return RankBound{0, FactorMatrix{form.m(), form.n(),
                                     Eigen::MatrixXd(0, system.basis_size())}};
  }
  for (int r = 1; r <= r_max; ++r) {
    if (auto factor = LowRankSearch(system, r, config)) {
      return RankBound{r, std::move(*factor)};
    }
  }
  return std::nullopt;
}

std::vector<NumericBilinearForm> RowsToBilinear(const FactorMatrix& factor) {
  std::vector<NumericBilinearForm> out;
  for (int k = 0; k < factor.rank(); ++k) {
    NumericBilinearForm l{factor.m, factor.n,
                          std::vector<double>(factor.m * factor.n)};
    for (int a = 0; a < factor.m * factor.n; ++a) {
      l.coeffs[a] = factor.columns(k, a);
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::optional<SOSDecomposition> Rationalize(const FactorMatrix& factor,
                                            const BiquadraticForm& target,
                                            long denominator_bound) {
  if (denominator_bound < 1) {
    throw RangeError("denominator bound must be at least 1");
  }
  if (factor.m != target.m() || factor.n != target.n()) {
    throw DimensionError("factor and target dimensions differ");
  }
  SOSDecomposition dec{target, {}};
  for (int k = 0; k < factor.rank(); ++k) {
    BilinearForm l(factor.m, factor.n);
    for (int a = 0; a < factor.m * factor.n; ++a) {
      l.set(a / factor.n + 1, a % factor.n + 1,
            BestRationalApproximation(factor.columns(k, a), denominator_bound));
    }
    if (!l.is_zero()) dec.squares.push_back(Square{Rational(1), std::move(l)});
  }
  if (!VerifyDecomposition(dec).equal) return std::nullopt;
  return dec;
}

FactorMatrix FactorFromSquares(std::span<const BilinearForm> squares) {
  if (squares.empty()) throw DimensionError("no squares to build a factor");
  const int m = squares.front().m();
  const int n = squares.front().n();
  FactorMatrix f{m, n,
                 Eigen::MatrixXd(static_cast<Eigen::Index>(squares.size()),
                                 m * n)};
  for (std::size_t k = 0; k < squares.size(); ++k) {
    if (squares[k].m() != m || squares[k].n() != n) {
      throw DimensionError("square dimensions do not match");
    }
    for (int a = 0; a < m * n; ++a) {
      f.columns(static_cast<Eigen::Index>(k), a) =
          ToDouble(squares[k].at(a / n + 1, a % n + 1));
    }
  }
  return f;
}

std::vector<Rational> GramFromSquares(std::span<const Square> squares, int m,
                                      int n) {
  const int size = m * n;
  std::vector<Rational> gram(static_cast<std::size_t>(size * size));
  for (const Square& s : squares) {
    if (s.form.m() != m || s.form.n() != n) {
      throw DimensionError("square dimensions do not match");
    }
    for (int a = 0; a < size; ++a) {
      const Rational& ca = s.form.at(a / n + 1, a % n + 1);
      if (sgn(ca) == 0) continue;
      for (int b = 0; b < size; ++b) {
        const Rational& cb = s.form.at(b / n + 1, b % n + 1);
        if (sgn(cb) != 0) gram[a * size + b] += s.weight * ca * cb;
      }
    }
  }
  return gram;
}

bool SatisfiesExactly(const GramSystem& system,
                      std::span<const Rational> gram) {
  const int size = system.basis_size();
  if (gram.size() != static_cast<std::size_t>(size * size)) {
    throw DimensionError("Gram matrix size does not match the system");
  }
  for (const GramConstraint& c : system.constraints()) {
    Rational sum = 0;
    for (const GramEntry& e : c.entries) {
      sum += e.multiplicity * gram[e.a * size + e.b];
    }
    if (sum != c.target) return false;
  }
  return true;
}

std::string FormatFactor(const FactorMatrix& factor) {
  std::ostringstream out;
  out << factor.rank() << " " << factor.columns.cols() << "\n";
  char buf[64];
  for (int k = 0; k < factor.rank(); ++k) {
    for (Eigen::Index a = 0; a < factor.columns.cols(); ++a) {
      std::snprintf(buf, sizeof buf, "%.17g", factor.columns(k, a));
      out << (a ? " " : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

FactorMatrix ParseFactor(std::string_view text, int m, int n) {
  CheckDimensions(m, n);
  std::istringstream in{std::string(text)};
  int r = 0, size = 0;
  if (!(in >> r >> size) || r < 0) {
    throw ParseError("expected factor header 'r mn'", 0);
  }
  if (size != m * n) {
    throw ParseError("factor basis size " + std::to_string(size) +
                         " does not match m*n = " + std::to_string(m * n),
                     0);
  }
  FactorMatrix f{m, n, Eigen::MatrixXd(r, size)};
  for (int k = 0; k < r; ++k) {
    for (int a = 0; a < size; ++a) {
      if (!(in >> f.columns(k, a))) {
        throw ParseError("factor row " + std::to_string(k + 1) +
                             " is too short",
                         0);
      }
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("unexpected trailing factor data", 0);
  return f;
}

}  // namespace bqsos
