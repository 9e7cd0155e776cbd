#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqsos/form.h"

namespace bqsos {

/// Bipartite graph between rows 1..m and columns 1..n. Each row stores its
/// neighbourhood as a column bitmask.
class BipartiteGraph {
 public:
  BipartiteGraph(int m, int n);

  /// Bit (i-1)*n + (j-1) of `mask` is edge (i, j). Requires m*n <= 64.
  static BipartiteGraph FromMask(int m, int n, std::uint64_t mask);

  int m() const { return m_; }
  int n() const { return n_; }

  bool HasEdge(int i, int j) const;
  void AddEdge(int i, int j);
  void RemoveEdge(int i, int j);

  /// Bit (j-1) set when (i, j) is an edge.
  std::uint16_t row_mask(int i) const { return rows_[i - 1]; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  std::uint64_t mask() const;

  friend bool operator==(const BipartiteGraph&,
                         const BipartiteGraph&) = default;

 private:
  int m_;
  int n_;
  std::array<std::uint16_t, kMaxDim> rows_{};
};

/// Four-cycle on rows {i, k} and columns {j, l}, canonical i < k, j < l.
struct C4Witness {
  int i = 0;
  int k = 0;
  int j = 0;
  int l = 0;

  std::array<std::pair<int, int>, 4> edges() const {
    return {{{i, j}, {i, l}, {k, j}, {k, l}}};
  }
  auto operator<=>(const C4Witness&) const = default;
};

/// Edge (i, j) for every unit pure square x_i^2 y_j^2. Throws
/// StructureError naming the offending monomial when the form has a cross
/// term, a non-square monomial, or a coefficient other than 1.
BipartiteGraph FromSimpleForm(const BiquadraticForm& form);

/// Lexicographically smallest witness (i, k, j, l), if any.
std::optional<C4Witness> FindC4(const BipartiteGraph& g);

/// Every C4 in lexicographic order.
std::vector<C4Witness> AllC4(const BipartiteGraph& g);

/// Smallest row triple adjacent to all three columns. Throws RangeError
/// unless n == 3.
std::optional<std::array<int, 3>> FindK33(const BipartiteGraph& g);

enum class Disjointness {
  kVertex,  // no shared row and no shared column
  kEdge,    // no shared edge
};

/// Lexicographically smallest pair (first < second) of disjoint C4s.
std::optional<std::pair<C4Witness, C4Witness>> FindTwoDisjointC4(
    const BipartiteGraph& g, Disjointness mode = Disjointness::kVertex);

struct ZarankiewiczResult {
  int max_edges = 0;
  BipartiteGraph witness;
};

/// Maximum edge count of a C4-free m x n bipartite graph by exhaustive
/// enumeration of all 2^(mn) edge sets. The witness is the first maximum
/// in increasing mask order. Throws RangeError when m*n > 20.
ZarankiewiczResult Zarankiewicz(int m, int n);

struct ScanViolation {
  std::uint64_t mask = 0;
  std::string reason;
};

/// Exhaustive check of the structural facts on 4x3 graphs with a fixed
/// edge count:
///  - every graph with 8..12 edges contains a C4;
///  - every 10-edge graph has two edge-disjoint C4s or a K_{3,3};
///  - every 11-edge graph contains a K_{3,3}.
struct LemmaScanReport {
  int m = 4;
  int n = 3;
  int edge_count = 0;
  long graphs = 0;
  long with_c4 = 0;
  long with_k33 = 0;
  long with_vertex_disjoint_pair = 0;
  long with_edge_disjoint_pair = 0;
  std::vector<ScanViolation> counterexamples;
};

/// Throws RangeError unless (m, n) == (4, 3) and 8 <= edge_count <= 12.
LemmaScanReport LemmaScan(int m, int n, int edge_count);

/// One line per counterexample followed by summary counts.
std::string FormatScanReport(const LemmaScanReport& report);

std::string ToString(const C4Witness& w);

}  // namespace bqsos
