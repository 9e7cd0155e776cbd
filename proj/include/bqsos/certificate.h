#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bqsos/form.h"

namespace bqsos {

// Lower bounds on the number of squares via Gram vectors.
//
// In any representation P = sum_{k<=r} l_k^2 write v_ij in R^r for the
// vector of coefficients of x_i y_j across the squares. Matching
// coefficients gives |v_ij|^2 = coeff(x_i^2 y_j^2) and, for each other
// monomial, a linear relation among inner products v_ij . v_pq. A
// certificate derives, one cited monomial at a time, that more than r
// nonzero vectors are pairwise orthogonal, which is impossible in R^r.

/// The Gram vector v_{row,col}.
struct PureLabel {
  int row = 0;
  int col = 0;
  auto operator<=>(const PureLabel&) const = default;
};

/// A pure vector, or the name of a merge (a set of pure vectors proven
/// parallel).
using Label = std::variant<PureLabel, std::string>;

std::string ToString(const PureLabel& label);
std::string ToString(const Label& label);

struct NormFact {
  PureLabel label;
  Rational value;  // |v|^2, equal to the pure-square coefficient
};

/// `name` stands for `first` and `second`, which the cross monomial forces
/// to be parallel: after dropping the product that contains the zero
/// companion, coeff = 2 v_first . v_second and (coeff/2)^2 equals
/// |v_first|^2 |v_second|^2 (Cauchy-Schwarz with equality).
struct Merge {
  std::string name;
  PureLabel first;
  PureLabel second;
  QuarticMonomial cross;
  std::optional<PureLabel> zero;
};

enum class StepRule {
  kDirect,    // the cited monomial expands to a single inner product
  kViaZero,   // two products, one containing a zero vector
  kViaKnown,  // two products, one already concluded zero
};

std::string ToString(StepRule rule);

/// Concludes first . second = 0 from the absence of `monomial`.
struct CertStep {
  QuarticMonomial monomial;
  StepRule rule = StepRule::kDirect;
  Label first;
  Label second;
  std::optional<PureLabel> zero;      // kViaZero
  std::optional<std::size_t> known;   // kViaKnown, 1-based earlier step
};

struct OrthogonalityCertificate {
  BiquadraticForm form;
  int rank = 0;
  std::vector<PureLabel> zeros;
  std::vector<NormFact> norms;
  std::vector<Merge> merges;
  std::vector<CertStep> steps;
  std::vector<Label> orthogonal_set;
};

struct CertVerdict {
  bool valid = false;
  /// Section of the first failing item: "form", "rank", "zeros", "norms",
  /// "merges", "steps" or "orthogonal_set".
  std::string section;
  /// 1-based item index within the section; 0 when not item-specific.
  std::size_t index = 0;
  std::string reason;
  std::size_t orthogonal_set_size = 0;

  std::string Describe() const;
};

/// Pure labels with a zero pure-square coefficient. Throws StructureError
/// if any pure-square coefficient is negative.
std::vector<PureLabel> DeriveZeroLabels(const BiquadraticForm& form);

struct MergeVerdict {
  bool valid = false;
  std::string reason;
};

MergeVerdict CheckMerge(const BiquadraticForm& form, const Merge& merge);

/// Replays the derivation in order. A valid verdict proves that the form
/// has no representation with rank or fewer squares.
CertVerdict CheckCertificate(const OrthogonalityCertificate& cert);

/// Checks the certificate against `form`, which must equal the embedded
/// form.
CertVerdict CheckCertificate(const OrthogonalityCertificate& cert,
                             const BiquadraticForm& form);

/// Unordered Gram products {v_ij, v_pq} contributing to a monomial.
std::vector<std::pair<PureLabel, PureLabel>> GramProducts(
    const QuarticMonomial& mono);

/// The rank-7 certificate for EightSquareForm(): zeros v21, v32, v43; the
/// merge w = v13 = v42; 28 steps; orthogonal set
/// {w, v11, v12, v22, v23, v31, v33, v41}.
OrthogonalityCertificate BuiltinQCertificate();

// Certificate text format ('#' starts a comment line):
//
//   dims: <m> <n>
//   form: <form>
//   rank: <r>
//   zeros: <pure>*
//   norms: (<pure>=<rational>)*
//   merges:
//     <name> = <pure> <pure> by <monomial> [zero <pure>]
//   steps:
//     <monomial> direct <label> <label>
//     <monomial> via-zero <label> <label> zero <pure>
//     <monomial> via-known <label> <label> step <k>
//   orthogonal_set: <label>*
//
// <pure> is v<row><col> with single-digit indices; any other identifier
// is a merge name. Monomials contain no whitespace.

std::string FormatCertificate(const OrthogonalityCertificate& cert);

/// Throws ParseError (message carries the 1-based line number) on
/// malformed input, including unknown rule tags.
OrthogonalityCertificate ParseCertificate(std::string_view text);

}  // namespace bqsos
