#include "cli.h"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bqsos/catalog.h"
#include "bqsos/certificate.h"
#include "bqsos/decomposer.h"
#include "bqsos/decomposition_io.h"
#include "bqsos/errors.h"
#include "bqsos/gram_search.h"
#include "bqsos/graph.h"
#include "bqsos/parse.h"
#include "bqsos/psd_sampling.h"

namespace bqsos::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  int m = 4;
  int n = 3;
  std::uint64_t seed = 0;
  int restarts = 0;  // 0: environment or library default
  double tol = 1e-9;
  bool json = false;
};

int EnvInt(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 1 || parsed > 1000000000L) {
    throw UsageError(std::string(name) + " must be a positive integer");
  }
  return static_cast<int>(parsed);
}

SearchConfig MakeConfig(const GlobalOptions& g) {
  SearchConfig config;
  config.max_restarts = EnvInt("BQSOS_SEARCH_RESTARTS", config.max_restarts);
  config.max_iterations =
      EnvInt("BQSOS_SEARCH_ITERATIONS", config.max_iterations);
  if (g.restarts > 0) config.max_restarts = g.restarts;
  config.seed = g.seed;
  config.tolerance = g.tol;
  config.Validate();
  return config;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::map<std::string, std::function<BiquadraticForm()>>& Builtins() {
  static const std::map<std::string, std::function<BiquadraticForm()>> table =
      [] {
        std::map<std::string, std::function<BiquadraticForm()>> t;
        t["Q"] = EightSquareForm;
        for (int s = 1; s <= 7; ++s) {
          t["P" + std::to_string(s)] = [s] { return SimpleFamily(s); };
        }
        t["ones33"] = [] { return AllOnesForm(3, 3); };
        t["ones43"] = [] { return AllOnesForm(4, 3); };
        t["coupled33"] = FullyCoupledExample;
        t["diag-example"] = WeightedDiagonalExample;
        t["perturbed"] = RankPreservingPerturbation;
        return t;
      }();
  return table;
}

// A built-in name, "@path" to a form file, or literal form text.
BiquadraticForm ResolveForm(const std::string& form_arg, const GlobalOptions& g) {
  const auto& builtins = Builtins();
  if (auto it = builtins.find(form_arg); it != builtins.end()) return it->second();
  if (!form_arg.empty() && form_arg.front() == '@') {
    std::istringstream in(ReadFile(form_arg.substr(1)));
    std::string line, text;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      text += line + " ";
    }
    return ParseForm(text, g.m, g.n);
  }
  return ParseForm(form_arg, g.m, g.n);
}

std::string PureName(int i, int j) {
  return "x" + std::to_string(i) + "^2*y" + std::to_string(j) + "^2";
}

json FormJson(const BiquadraticForm& form) {
  return {{"m", form.m()},
          {"n", form.n()},
          {"terms", form.term_count()},
          {"form", FormatForm(form)}};
}

void Emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- parse

int CmdParse(const GlobalOptions& g, const std::string& form_arg,
             std::ostream& out) {
  const BiquadraticForm form = ResolveForm(form_arg, g);
  if (g.json) {
    json j = FormJson(form);
    j["command"] = "parse";
    Emit(out, j);
  } else {
    out << FormatForm(form) << "\n";
  }
  return kSuccess;
}

// -------------------------------------------------------------- analyze

int CmdAnalyze(const GlobalOptions& g, const std::string& form_arg, int trials,
               std::ostream& out) {
  const BiquadraticForm form = ResolveForm(form_arg, g);
  std::vector<std::string> present, absent;
  for (int i = 1; i <= form.m(); ++i) {
    for (int j = 1; j <= form.n(); ++j) {
      (sgn(form.PureSquareCoefficient(i, j)) != 0 ? present : absent)
          .push_back(PureName(i, j));
    }
  }
  json cross = json::array();
  for (const auto& [mono, c] : form.coefficients()) {
    if (!mono.is_pure_square()) {
      cross.push_back({{"monomial", ToString(mono)}, {"coefficient", ToString(c)}});
    }
  }

  json graph = nullptr;
  std::string simple_reason;
  try {
    const BipartiteGraph gph = FromSimpleForm(form);
    json edges = json::array();
    for (const auto& [i, j] : gph.edges()) edges.push_back({i, j});
    const auto c4s = AllC4(gph);
    json k33 = nullptr;
    if (gph.n() == 3) {
      if (auto rows = FindK33(gph)) k33 = *rows;
    }
    graph = {{"edge_count", gph.edge_count()},
             {"edges", edges},
             {"c4_free", c4s.empty()},
             {"c4_count", c4s.size()},
             {"k33_rows", k33}};
  } catch (const StructureError& e) {
    simple_reason = e.what();
    if (simple_reason.starts_with("not simple: ")) simple_reason.erase(0, 12);
  }

  const std::vector<int> ydef = DetectYDeficient(form);
  std::string ydef_note;
  if (!ydef.empty() && !cross.empty()) {
    ydef_note =
        "qualifying columns are determined by the terms in y_j alone; cross "
        "terms in the other columns remain in the split remainder";
  }

  const auto negative = PsdSampleCheck(form, trials, g.seed);

  if (g.json) {
    json psd = {{"trials", trials},
                {"seed", g.seed},
                {"negative_found", negative.has_value()}};
    if (negative) {
      json x = json::array(), y = json::array();
      for (const auto& v : negative->x) x.push_back(ToString(v));
      for (const auto& v : negative->y) y.push_back(ToString(v));
      psd["point"] = {{"x", x}, {"y", y}, {"value", ToString(negative->value)}};
    }
    json j = FormJson(form);
    j["command"] = "analyze";
    j["pure_squares"] = {{"present", present}, {"absent", absent}};
    j["cross_terms"] = cross;
    j["simple"] = !graph.is_null();
    j["graph"] = graph;
    j["y_deficient_columns"] = ydef;
    j["y_deficient_note"] = ydef_note;
    j["diagonal"] = form.IsDiagonal();
    j["psd_sampling"] = psd;
    Emit(out, j);
    return kSuccess;
  }

  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s.empty() ? std::string("(none)") : s;
  };
  out << "dimensions: " << form.m() << " x " << form.n() << "\n";
  out << "form: " << FormatForm(form) << "\n";
  out << "terms: " << form.term_count() << "\n";
  out << "pure squares present (" << present.size() << "): " << join(present)
      << "\n";
  out << "pure squares absent (" << absent.size() << "): " << join(absent)
      << "\n";
  out << "cross terms (" << cross.size() << "):";
  if (cross.empty()) out << " (none)";
  for (const auto& c : cross) {
    out << " " << c["coefficient"].get<std::string>() << "*"
        << c["monomial"].get<std::string>();
  }
  out << "\n";
  if (graph.is_null()) {
    out << "simple: no (" << simple_reason << ")\n";
  } else {
    out << "simple: yes, " << graph["edge_count"].get<int>() << " edges, ";
    if (graph["c4_free"].get<bool>()) {
      out << "C4-free";
    } else {
      out << graph["c4_count"].get<std::size_t>() << " C4s";
    }
    if (!graph["k33_rows"].is_null()) {
      const auto rows = graph["k33_rows"].get<std::vector<int>>();
      out << ", K33 on rows " << rows[0] << "," << rows[1] << "," << rows[2];
    }
    out << "\n";
  }
  out << "y-deficient columns:";
  if (ydef.empty()) out << " (none)";
  for (int j : ydef) out << " " << j;
  out << "\n";
  if (!ydef_note.empty()) out << "  note: " << ydef_note << "\n";
  out << "diagonal: " << (form.IsDiagonal() ? "yes" : "no") << "\n";
  out << "psd sampling (" << trials << " points, seed " << g.seed << "): ";
  if (negative) {
    out << "NEGATIVE value " << ToString(negative->value) << " at x=(";
    for (std::size_t i = 0; i < negative->x.size(); ++i) {
      out << (i ? "," : "") << ToString(negative->x[i]);
    }
    out << ") y=(";
    for (std::size_t i = 0; i < negative->y.size(); ++i) {
      out << (i ? "," : "") << ToString(negative->y[i]);
    }
    out << "); the form is not PSD\n";
  } else {
    out << "no negative value found (evidence only, not a proof)\n";
  }
  return kSuccess;
}

// ------------------------------------------------------------ decompose

int CmdDecompose(const GlobalOptions& g, const std::string& form_arg,
                 const std::string& strategy_name, int j0, long denominator,
                 const std::string& out_path, std::ostream& out) {
  const BiquadraticForm form = ResolveForm(form_arg, g);
  const SearchConfig config = MakeConfig(g);
  Strategy strategy;
  try {
    strategy = ParseStrategy(strategy_name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (j0 != 0 && strategy != Strategy::kYDeficient) {
    throw UsageError("--j0 requires --strategy ydeficient");
  }
  Decomposition dec =
      j0 != 0 ? DecomposeYDeficient(form, j0, config, denominator)
              : Decompose(form, strategy, config, denominator);
  dec.notes.push_back("seed " + std::to_string(config.seed) + ", restarts " +
                      std::to_string(config.max_restarts));
  const DecompositionCheck check = CheckDecomposition(dec, g.tol);
  const std::string text = FormatDecomposition(dec);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << text;
  }
  if (g.json) {
    Emit(out, {{"command", "decompose"},
               {"strategy", dec.strategy},
               {"squares", dec.size()},
               {"exact", dec.exact()},
               {"verified", check.ok},
               {"max_error", check.max_error},
               {"seed", config.seed},
               {"notes", dec.notes},
               {"decomposition", text}});
  } else if (!out_path.empty()) {
    out << "wrote " << dec.size() << " " << (dec.exact() ? "exact" : "numeric")
        << " squares (" << dec.strategy << ") to " << out_path << "\n";
  } else {
    out << text;
  }
  return check.ok ? kSuccess : kCheckFailed;
}

// --------------------------------------------------------------- verify

int CmdVerify(const GlobalOptions& g, const std::string& form_arg,
              const std::string& path, std::ostream& out) {
  const BiquadraticForm form = ResolveForm(form_arg, g);
  Decomposition dec = ParseDecomposition(ReadFile(path), form.m(), form.n());
  const bool target_matches = dec.target == form;
  dec.target = form;
  const DecompositionCheck check = CheckDecomposition(dec, g.tol);
  const bool ok = target_matches && check.ok;
  if (g.json) {
    Emit(out, {{"command", "verify"},
               {"ok", ok},
               {"target_matches", target_matches},
               {"exact", check.exact},
               {"max_error", check.max_error},
               {"tolerance", g.tol},
               {"squares", dec.size()}});
  } else {
    if (!target_matches) {
      out << "failed: the decomposition file targets a different form\n";
    }
    if (check.ok) {
      out << (target_matches ? "ok: " : "  squares alone: ") << dec.size()
          << " squares, ";
      if (check.exact) {
        out << "exact identity\n";
      } else {
        out << "numeric, max error " << check.max_error << " <= " << g.tol
            << "\n";
      }
    } else if (check.exact) {
      out << "failed: the exact expansion differs from the form\n";
    } else {
      out << "failed: numeric max error " << check.max_error << " > " << g.tol
          << "\n";
    }
  }
  return ok ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------- rank-search

int CmdRankSearch(const GlobalOptions& g, const std::string& form_arg, int r,
                  bool min_mode, int r_max, long denominator,
                  const std::string& out_path, std::ostream& out) {
  const BiquadraticForm form = ResolveForm(form_arg, g);
  const SearchConfig config = MakeConfig(g);
  const GramSystem system = BuildGramSystem(form);
  if (min_mode == (r > 0)) {
    throw UsageError("give exactly one of --r <k> or --min --rmax <k>");
  }
  if (min_mode && r_max < 1) throw UsageError("--min needs --rmax >= 1");

  std::optional<FactorMatrix> factor;
  int rank = r;
  if (min_mode) {
    if (auto bound = MinRankUpperBound(form, r_max, config)) {
      rank = bound->rank;
      factor = bound->factor;
    }
  } else {
    factor = LowRankSearch(system, r, config);
  }

  json j = {{"command", "rank-search"},
            {"mode", min_mode ? "min" : "fixed"},
            {"seed", config.seed},
            {"restarts", config.max_restarts},
            {"tolerance", config.tolerance},
            {"success", factor.has_value()}};
  if (!factor) {
    const std::string what =
        min_mode ? "no factor of rank <= " + std::to_string(r_max)
                 : "no rank-" + std::to_string(r) + " factor";
    if (g.json) {
      j["rank"] = min_mode ? r_max : r;
      Emit(out, j);
    } else {
      out << "inconclusive: " << what << " found with "
          << config.max_restarts << " restarts from seed " << config.seed
          << "; this does not prove that none exists\n";
    }
    return kInconclusive;
  }

  const double residual = MaxResidual(system, *factor);
  std::optional<SOSDecomposition> exact;
  if (factor->rank() > 0) exact = Rationalize(*factor, form, denominator);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << FormatFactor(*factor);
  }
  std::vector<std::string> numeric_rows, exact_rows;
  for (const auto& row : RowsToBilinear(*factor)) {
    numeric_rows.push_back(FormatNumericBilinear(row));
  }
  if (exact) {
    for (const Square& s : exact->squares) exact_rows.push_back(FormatSquare(s));
  }
  if (g.json) {
    j["rank"] = rank;
    j["max_residual"] = residual;
    j["factor_rows"] = numeric_rows;
    j["exact_squares"] = exact ? json(exact_rows) : json(nullptr);
    Emit(out, j);
    return kSuccess;
  }
  if (min_mode) {
    out << "upper bound: at most " << rank << " squares";
  } else {
    out << "success: rank-" << rank << " factor";
  }
  out << " (max residual " << residual << ", seed " << config.seed << ")\n";
  for (const auto& row : numeric_rows) out << "~ " << row << "\n";
  if (exact) {
    out << "exact after rounding (" << exact_rows.size() << " squares):\n";
    for (const auto& row : exact_rows) out << row << "\n";
  }
  return kSuccess;
}

// --------------------------------------------------- graph computations

int CmdZarankiewicz(const GlobalOptions& g, std::ostream& out) {
  CheckDimensions(g.m, g.n);
  const ZarankiewiczResult result = Zarankiewicz(g.m, g.n);
  json edges = json::array();
  for (const auto& [i, j] : result.witness.edges()) edges.push_back({i, j});
  if (g.json) {
    Emit(out, {{"command", "zarankiewicz"},
               {"m", g.m},
               {"n", g.n},
               {"max_edges", result.max_edges},
               {"witness_edges", edges}});
  } else {
    out << "z(" << g.m << "," << g.n << ") = " << result.max_edges << "\n";
    out << "witness:";
    for (const auto& [i, j] : result.witness.edges()) {
      out << " (" << i << "," << j << ")";
    }
    out << "\n";
  }
  return kSuccess;
}

int CmdLemmaScan(const GlobalOptions& g, int edges, std::ostream& out) {
  const LemmaScanReport report = LemmaScan(g.m, g.n, edges);
  if (g.json) {
    json violations = json::array();
    for (const auto& v : report.counterexamples) {
      violations.push_back({{"mask", v.mask}, {"reason", v.reason}});
    }
    Emit(out, {{"command", "lemma-scan"},
               {"m", report.m},
               {"n", report.n},
               {"edges", report.edge_count},
               {"graphs", report.graphs},
               {"with_c4", report.with_c4},
               {"with_k33", report.with_k33},
               {"with_vertex_disjoint_pair", report.with_vertex_disjoint_pair},
               {"with_edge_disjoint_pair", report.with_edge_disjoint_pair},
               {"counterexamples", violations}});
  } else {
    out << FormatScanReport(report);
  }
  return report.counterexamples.empty() ? kSuccess : kCheckFailed;
}

// --------------------------------------------------------- certificates

int CmdCheckCert(const GlobalOptions& g, const std::string& form_arg,
                 const std::string& path, std::ostream& out) {
  const OrthogonalityCertificate cert = path == "builtin"
                                            ? BuiltinQCertificate()
                                            : ParseCertificate(ReadFile(path));
  GlobalOptions dims = g;
  dims.m = cert.form.m();
  dims.n = cert.form.n();
  const BiquadraticForm form = ResolveForm(form_arg, dims);
  const CertVerdict verdict = CheckCertificate(cert, form);
  if (g.json) {
    Emit(out, {{"command", "check-cert"},
               {"valid", verdict.valid},
               {"rank", cert.rank},
               {"steps", cert.steps.size()},
               {"orthogonal_set_size", verdict.orthogonal_set_size},
               {"section", verdict.section},
               {"index", verdict.index},
               {"reason", verdict.reason}});
  } else if (verdict.valid) {
    out << "valid: no decomposition with <= " << cert.rank << " squares ("
        << verdict.orthogonal_set_size << " pairwise orthogonal Gram vectors, "
        << cert.steps.size() << " steps)\n";
  } else {
    out << verdict.Describe() << "\n";
  }
  return verdict.valid ? kSuccess : kCheckFailed;
}

int CmdBuiltinCert(const GlobalOptions& g, std::ostream& out) {
  const std::string text = FormatCertificate(BuiltinQCertificate());
  if (g.json) {
    Emit(out, {{"command", "builtin-cert"}, {"certificate", text}});
  } else {
    out << text;
  }
  return kSuccess;
}

std::string BuiltinList() {
  std::string s;
  for (const auto& [name, _] : Builtins()) s += (s.empty() ? "" : ", ") + name;
  return s;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Biquadratic sum-of-squares toolkit"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--m", g.m, "x-dimension for literal forms")
      ->check(CLI::Range(1, kMaxDim));
  app.add_option("--n", g.n, "y-dimension for literal forms")
      ->check(CLI::Range(1, kMaxDim));
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_option("--restarts", g.restarts,
                 "search restarts (default: BQSOS_SEARCH_RESTARTS or 200)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "residual and verification tolerance")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "machine-readable output");
  app.footer("FORM is literal text such as \"x1^2*y1^2 + 2*x1*x2*y1*y2\", "
             "@path to a form file, or one of: " + BuiltinList());

  std::string form_spec, second;
  int trials = 1000;
  std::string strategy = "auto", out_path;
  int j0 = 0, r = 0, r_max = 0, edges = 0;
  long denominator = 1000;
  bool min_mode = false;

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* parse = sub("parse", "echo the canonical form");
  parse->add_option("form", form_spec, "FORM")->required();

  CLI::App* analyze = sub("analyze", "report structure and a PSD sampling check");
  analyze->add_option("form", form_spec, "FORM")->required();
  analyze->add_option("--trials", trials, "PSD sampling points")
      ->check(CLI::PositiveNumber);

  CLI::App* decompose = sub("decompose", "emit a verified decomposition file");
  decompose->add_option("form", form_spec, "FORM")->required();
  decompose->add_option("--strategy", strategy,
                        "auto|simple|ydeficient|rowsplit|gram");
  decompose->add_option("--j0", j0, "split column for ydeficient")
      ->check(CLI::Range(1, kMaxDim));
  decompose->add_option("--denominator", denominator,
                        "rounding denominator bound for exact recovery")
      ->check(CLI::PositiveNumber);
  decompose->add_option("--out", out_path, "write the decomposition here");

  CLI::App* verify = sub("verify", "check a decomposition file against a form");
  verify->add_option("form", form_spec, "FORM")->required();
  verify->add_option("decomposition", second, "decomposition file")
      ->required();

  CLI::App* rank = sub("rank-search", "numeric low-rank Gram search");
  rank->add_option("form", form_spec, "FORM")->required();
  rank->add_option("--r", r, "target rank")->check(CLI::PositiveNumber);
  rank->add_flag("--min", min_mode, "smallest rank found up to --rmax");
  rank->add_option("--rmax", r_max, "largest rank tried with --min")
      ->check(CLI::PositiveNumber);
  rank->add_option("--denominator", denominator,
                   "rounding denominator bound for exact recovery")
      ->check(CLI::PositiveNumber);
  rank->add_option("--out", out_path, "write the factor here");

  CLI::App* zaran = sub("zarankiewicz", "largest C4-free bipartite graph");

  CLI::App* scan = sub("lemma-scan", "exhaustive structural scan of 4x3 graphs");
  scan->add_option("--edges", edges, "edge count (8..12)")->required();

  CLI::App* check = sub("check-cert", "check an orthogonality certificate");
  check->add_option("form", form_spec, "FORM")->required();
  check->add_option("certificate", second, "certificate file or 'builtin'")
      ->required();

  CLI::App* builtin = sub("builtin-cert", "emit the stored certificate for Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*parse) return CmdParse(g, form_spec, out);
    if (*analyze) return CmdAnalyze(g, form_spec, trials, out);
    if (*decompose) {
      return CmdDecompose(g, form_spec, strategy, j0, denominator, out_path,
                          out);
    }
    if (*verify) return CmdVerify(g, form_spec, second, out);
    if (*rank) {
      return CmdRankSearch(g, form_spec, r, min_mode, r_max, denominator,
                           out_path, out);
    }
    if (*zaran) return CmdZarankiewicz(g, out);
    if (*scan) return CmdLemmaScan(g, edges, out);
    if (*check) return CmdCheckCert(g, form_spec, second, out);
    if (*builtin) return CmdBuiltinCert(g, out);
  } catch (const SearchFailure& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace bqsos::cli
