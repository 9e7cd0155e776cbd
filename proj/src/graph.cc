#include "bqsos/graph.h"

#include <bit>
#include <sstream>

#include "bqsos/errors.h"

namespace bqsos {

namespace {

bool HasC4Fast(const BipartiteGraph& g) {
  for (int i = 1; i <= g.m(); ++i) {
    for (int k = i + 1; k <= g.m(); ++k) {
      if (std::popcount(static_cast<unsigned>(g.row_mask(i) & g.row_mask(k))) >=
          2) {
        return true;
      }
    }
  }
  return false;
}

bool EdgeDisjoint(const C4Witness& a, const C4Witness& b) {
  const bool share_row = a.i == b.i || a.i == b.k || a.k == b.i || a.k == b.k;
  const bool share_col = a.j == b.j || a.j == b.l || a.l == b.j || a.l == b.l;
  return !(share_row && share_col);
}

bool VertexDisjoint(const C4Witness& a, const C4Witness& b) {
  const bool share_row = a.i == b.i || a.i == b.k || a.k == b.i || a.k == b.k;
  const bool share_col = a.j == b.j || a.j == b.l || a.l == b.j || a.l == b.l;
  return !share_row && !share_col;
}

}  // namespace

BipartiteGraph::BipartiteGraph(int m, int n) : m_(m), n_(n) {
  CheckDimensions(m, n);
}

BipartiteGraph BipartiteGraph::FromMask(int m, int n, std::uint64_t mask) {
  if (m * n > 64) throw RangeError("graph too large for a 64-bit mask");
  BipartiteGraph g(m, n);
  for (int b = 0; b < m * n; ++b) {
    if ((mask >> b) & 1u) g.AddEdge(b / n + 1, b % n + 1);
  }
  return g;
}

bool BipartiteGraph::HasEdge(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) return false;
  return (rows_[i - 1] >> (j - 1)) & 1u;
}

void BipartiteGraph::AddEdge(int i, int j) {
  if (i < 1 || i > m_ || j < 1 || j > n_) {
    throw BoundsError("edge (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") out of range");
  }
  rows_[i - 1] |= static_cast<std::uint16_t>(1u << (j - 1));
}

void BipartiteGraph::RemoveEdge(int i, int j) {
  if (i < 1 || i > m_ || j < 1 || j > n_) return;
  rows_[i - 1] &= static_cast<std::uint16_t>(~(1u << (j - 1)));
}

int BipartiteGraph::edge_count() const {
  int total = 0;
  for (int i = 0; i < m_; ++i) total += std::popcount(rows_[i]);
  return total;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (HasEdge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t BipartiteGraph::mask() const {
  if (m_ * n_ > 64) throw RangeError("graph too large for a 64-bit mask");
  std::uint64_t out = 0;
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (HasEdge(i, j)) out |= std::uint64_t{1} << ((i - 1) * n_ + (j - 1));
    }
  }
  return out;
}

BipartiteGraph FromSimpleForm(const BiquadraticForm& form) {
  BipartiteGraph g(form.m(), form.n());
  for (const auto& [mono, c] : form.coefficients()) {
    if (!mono.is_pure_square()) {
      throw StructureError("not simple: monomial " + ToString(mono) +
                           " is not a pure square");
    }
    if (c != 1) {
      throw StructureError("not simple: coefficient " + ToString(c) +
                           " on " + ToString(mono));
    }
    g.AddEdge(mono.xi, mono.yj);
  }
  return g;
}

std::vector<C4Witness> AllC4(const BipartiteGraph& g) {
  std::vector<C4Witness> out;
  for (int i = 1; i <= g.m(); ++i) {
    for (int k = i + 1; k <= g.m(); ++k) {
      const unsigned common = g.row_mask(i) & g.row_mask(k);
      if (std::popcount(common) < 2) continue;
      for (int j = 1; j <= g.n(); ++j) {
        if (!((common >> (j - 1)) & 1u)) continue;
        for (int l = j + 1; l <= g.n(); ++l) {
          if ((common >> (l - 1)) & 1u) out.push_back(C4Witness{i, k, j, l});
        }
      }
    }
  }
  return out;
}

std::optional<C4Witness> FindC4(const BipartiteGraph& g) {
  for (int i = 1; i <= g.m(); ++i) {
    for (int k = i + 1; k <= g.m(); ++k) {
      const unsigned common = g.row_mask(i) & g.row_mask(k);
      if (std::popcount(common) < 2) continue;
      const int j = std::countr_zero(common) + 1;
      const unsigned rest = common & (common - 1);
      const int l = std::countr_zero(rest) + 1;
      return C4Witness{i, k, j, l};
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> FindK33(const BipartiteGraph& g) {
  if (g.n() != 3) throw RangeError("K_{3,3} search requires n = 3");
  std::vector<int> full;
  for (int i = 1; i <= g.m(); ++i) {
    if (g.row_mask(i) == 0b111) full.push_back(i);
    if (full.size() == 3) return std::array<int, 3>{full[0], full[1], full[2]};
  }
  return std::nullopt;
}

std::optional<std::pair<C4Witness, C4Witness>> FindTwoDisjointC4(
    const BipartiteGraph& g, Disjointness mode) {
  const std::vector<C4Witness> all = AllC4(g);
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      const bool ok = mode == Disjointness::kVertex
                          ? VertexDisjoint(all[a], all[b])
                          : EdgeDisjoint(all[a], all[b]);
      if (ok) return std::make_pair(all[a], all[b]);
    }
  }
  return std::nullopt;
}

ZarankiewiczResult Zarankiewicz(int m, int n) {
  CheckDimensions(m, n);
  if (m * n > 20) {
    throw RangeError("exhaustive enumeration budget exceeded: m*n = " +
                     std::to_string(m * n) + " > 20");
  }
  const std::uint64_t limit = std::uint64_t{1} << (m * n);
  int best = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const int count = std::popcount(mask);
    if (count <= best) continue;
    if (!HasC4Fast(BipartiteGraph::FromMask(m, n, mask))) {
      best = count;
      best_mask = mask;
    }
  }
  return ZarankiewiczResult{best, BipartiteGraph::FromMask(m, n, best_mask)};
}

LemmaScanReport LemmaScan(int m, int n, int edge_count) {
  if (m != 4 || n != 3) throw RangeError("lemma scan supports (4, 3) only");
  if (edge_count < 8 || edge_count > 12) {
    throw RangeError("lemma scan edge count must be in 8..12");
  }
  LemmaScanReport report;
  report.m = m;
  report.n = n;
  report.edge_count = edge_count;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 12); ++mask) {
    if (std::popcount(mask) != edge_count) continue;
    ++report.graphs;
    const BipartiteGraph g = BipartiteGraph::FromMask(m, n, mask);
    const bool c4 = FindC4(g).has_value();
    const bool k33 = FindK33(g).has_value();
    const bool vertex_pair =
        FindTwoDisjointC4(g, Disjointness::kVertex).has_value();
    const bool edge_pair = FindTwoDisjointC4(g, Disjointness::kEdge).has_value();
    report.with_c4 += c4;
    report.with_k33 += k33;
    report.with_vertex_disjoint_pair += vertex_pair;
    report.with_edge_disjoint_pair += edge_pair;
    if (!c4) report.counterexamples.push_back({mask, "no C4"});
    if (edge_count == 10 && !edge_pair && !k33) {
      report.counterexamples.push_back(
          {mask, "neither two edge-disjoint C4s nor a K_{3,3}"});
    }
    if (edge_count == 11 && !k33) {
      report.counterexamples.push_back({mask, "no K_{3,3}"});
    }
  }
  return report;
}

std::string FormatScanReport(const LemmaScanReport& report) {
  std::ostringstream out;
  for (const ScanViolation& v : report.counterexamples) {
    out << "violation mask=0x" << std::hex << v.mask << std::dec << " edges=";
    const BipartiteGraph g = BipartiteGraph::FromMask(report.m, report.n, v.mask);
    for (auto [i, j] : g.edges()) out << "(" << i << "," << j << ")";
    out << " reason=" << v.reason << "\n";
  }
  out << "dimensions: " << report.m << "x" << report.n << "\n"
      << "edges: " << report.edge_count << "\n"
      << "graphs: " << report.graphs << "\n"
      << "with_c4: " << report.with_c4 << "\n"
      << "with_k33: " << report.with_k33 << "\n"
      << "with_edge_disjoint_c4_pair: " << report.with_edge_disjoint_pair
      << "\n"
      << "with_vertex_disjoint_c4_pair: " << report.with_vertex_disjoint_pair
      << "\n"
      << "counterexamples: " << report.counterexamples.size() << "\n";
  return out.str();
}

std::string ToString(const C4Witness& w) {
  return "rows {" + std::to_string(w.i) + "," + std::to_string(w.k) +
         "} columns {" + std::to_string(w.j) + "," + std::to_string(w.l) + "}";
}

}  // namespace bqsos
