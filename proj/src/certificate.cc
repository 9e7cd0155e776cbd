#include "bqsos/certificate.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "bqsos/catalog.h"
#include "bqsos/errors.h"
#include "bqsos/parse.h"

namespace bqsos {

std::string ToString(const PureLabel& label) {
  return "v" + std::to_string(label.row) + std::to_string(label.col);
}

std::string ToString(const Label& label) {
  if (const auto* pure = std::get_if<PureLabel>(&label)) return ToString(*pure);
  return std::get<std::string>(label);
}

std::string ToString(StepRule rule) {
  switch (rule) {
    case StepRule::kDirect: return "direct";
    case StepRule::kViaZero: return "via-zero";
    case StepRule::kViaKnown: return "via-known";
  }
  return "direct";
}

std::string CertVerdict::Describe() const {
  if (valid) {
    return "valid: " + std::to_string(orthogonal_set_size) +
           " pairwise orthogonal nonzero Gram vectors";
  }
  std::string out = "invalid [" + section;
  if (index) out += " #" + std::to_string(index);
  return out + "]: " + reason;
}

std::vector<std::pair<PureLabel, PureLabel>> GramProducts(
    const QuarticMonomial& mono) {
  const int i = mono.xi, k = mono.xk, j = mono.yj, l = mono.yl;
  if (i == k || j == l) return {{PureLabel{i, j}, PureLabel{k, l}}};
  return {{PureLabel{i, j}, PureLabel{k, l}}, {PureLabel{i, l}, PureLabel{k, j}}};
}

std::vector<PureLabel> DeriveZeroLabels(const BiquadraticForm& form) {
  std::vector<PureLabel> out;
  for (int i = 1; i <= form.m(); ++i) {
    for (int j = 1; j <= form.n(); ++j) {
      const Rational c = form.PureSquareCoefficient(i, j);
      if (sgn(c) < 0) {
        throw StructureError("negative pure-square coefficient on x" +
                             std::to_string(i) + "^2*y" + std::to_string(j) +
                             "^2: the form is not SOS");
      }
      if (sgn(c) == 0) out.push_back(PureLabel{i, j});
    }
  }
  return out;
}

namespace {

bool InBounds(const PureLabel& p, const BiquadraticForm& form) {
  return p.row >= 1 && p.row <= form.m() && p.col >= 1 && p.col <= form.n();
}

bool Contains(const std::pair<PureLabel, PureLabel>& product,
              const PureLabel& p) {
  return product.first == p || product.second == p;
}

using LabelPair = std::pair<Label, Label>;

LabelPair Unordered(Label a, Label b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::string PairText(const LabelPair& p) {
  return ToString(p.first) + "." + ToString(p.second);
}

// Replaces merge members by their merge name.
class Substitution {
 public:
  void Add(const PureLabel& member, const std::string& name) {
    map_[member] = name;
  }
  bool IsMember(const PureLabel& p) const { return map_.count(p) != 0; }
  Label operator()(const Label& label) const {
    if (const auto* pure = std::get_if<PureLabel>(&label)) {
      auto it = map_.find(*pure);
      if (it != map_.end()) return it->second;
    }
    return label;
  }
  LabelPair operator()(const std::pair<PureLabel, PureLabel>& product) const {
    return Unordered((*this)(Label(product.first)),
                     (*this)(Label(product.second)));
  }

 private:
  std::map<PureLabel, std::string> map_;
};

CertVerdict Fail(std::string section, std::size_t index, std::string reason) {
  CertVerdict v;
  v.valid = false;
  v.section = std::move(section);
  v.index = index;
  v.reason = std::move(reason);
  return v;
}

bool IsPureLabelText(std::string_view s) {
  return s.size() == 3 && s[0] == 'v' && std::isdigit(static_cast<unsigned char>(s[1])) &&
         std::isdigit(static_cast<unsigned char>(s[2]));
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || IsPureLabelText(s)) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

MergeVerdict CheckMerge(const BiquadraticForm& form, const Merge& merge) {
  auto bad = [](std::string r) { return MergeVerdict{false, std::move(r)}; };
  if (!InBounds(merge.first, form) || !InBounds(merge.second, form)) {
    return bad("member label out of bounds");
  }
  if (merge.first == merge.second) return bad("members must be distinct");
  if (!merge.cross.InBounds(form.m(), form.n())) {
    return bad("cross monomial out of bounds");
  }
  const Rational c = form.Coefficient(merge.cross);
  if (sgn(c) == 0) {
    return bad("cross monomial " + ToString(merge.cross) + " is absent");
  }
  const auto products = GramProducts(merge.cross);
  const std::pair<PureLabel, PureLabel> target{merge.first, merge.second};
  auto matches = [&](const std::pair<PureLabel, PureLabel>& p) {
    return (p.first == target.first && p.second == target.second) ||
           (p.first == target.second && p.second == target.first);
  };
  bool found = false;
  for (const auto& p : products) {
    if (matches(p) && !found) {
      found = true;
      continue;
    }
    // Every other product must vanish through the zero companion.
    if (!merge.zero) {
      return bad("expansion of " + ToString(merge.cross) +
                 " has a second product and no zero companion is given");
    }
    if (!Contains(p, *merge.zero)) {
      return bad("companion " + ToString(*merge.zero) +
                 " does not occur in the other product of " +
                 ToString(merge.cross));
    }
  }
  if (!found) {
    return bad(ToString(merge.first) + "." + ToString(merge.second) +
               " is not a product in the expansion of " +
               ToString(merge.cross));
  }
  if (merge.zero) {
    if (!InBounds(*merge.zero, form)) return bad("companion label out of bounds");
    const Rational z =
        form.PureSquareCoefficient(merge.zero->row, merge.zero->col);
    if (sgn(z) != 0) {
      return bad("companion " + ToString(*merge.zero) +
                 " is not zero: pure-square coefficient " + ToString(z));
    }
  }
  const Rational a = form.PureSquareCoefficient(merge.first.row, merge.first.col);
  const Rational b =
      form.PureSquareCoefficient(merge.second.row, merge.second.col);
  if (sgn(a) <= 0 || sgn(b) <= 0) {
    return bad("members must have positive norms");
  }
  // The single surviving product has multiplicity 2.
  const Rational inner = c / 2;
  if (inner * inner != a * b) {
    return bad("no Cauchy-Schwarz tightness: (" + ToString(inner) + ")^2 != " +
               ToString(a) + " * " + ToString(b));
  }
  return MergeVerdict{true, ""};
}

CertVerdict CheckCertificate(const OrthogonalityCertificate& cert,
                             const BiquadraticForm& form) {
  if (!(cert.form == form)) {
    return Fail("form", 0, "certificate form differs from the supplied form");
  }
  return CheckCertificate(cert);
}

CertVerdict CheckCertificate(const OrthogonalityCertificate& cert) {
  const BiquadraticForm& form = cert.form;
  if (cert.rank < 0) return Fail("rank", 0, "rank must be nonnegative");
  try {
    DeriveZeroLabels(form);
  } catch (const StructureError& e) {
    return Fail("form", 0, e.what());
  }

  std::set<PureLabel> zeros;
  for (std::size_t z = 0; z < cert.zeros.size(); ++z) {
    const PureLabel& p = cert.zeros[z];
    if (!InBounds(p, form)) return Fail("zeros", z + 1, "label out of bounds");
    const Rational c = form.PureSquareCoefficient(p.row, p.col);
    if (sgn(c) != 0) {
      return Fail("zeros", z + 1,
                  ToString(p) + " has pure-square coefficient " +
                      ToString(c) + ", not 0");
    }
    zeros.insert(p);
  }

  std::map<PureLabel, Rational> norms;
  for (std::size_t k = 0; k < cert.norms.size(); ++k) {
    const NormFact& f = cert.norms[k];
    if (!InBounds(f.label, form)) return Fail("norms", k + 1, "label out of bounds");
    const Rational c = form.PureSquareCoefficient(f.label.row, f.label.col);
    if (f.value != c) {
      return Fail("norms", k + 1,
                  ToString(f.label) + " claims norm " + ToString(f.value) +
                      " but the pure-square coefficient is " + ToString(c));
    }
    if (sgn(c) <= 0) {
      return Fail("norms", k + 1, ToString(f.label) + " has no positive norm");
    }
    if (!norms.emplace(f.label, c).second) {
      return Fail("norms", k + 1, "duplicate norm fact for " + ToString(f.label));
    }
  }

  Substitution subst;
  std::map<std::string, const Merge*> merges;
  for (std::size_t k = 0; k < cert.merges.size(); ++k) {
    const Merge& mg = cert.merges[k];
    if (!IsIdentifier(mg.name)) {
      return Fail("merges", k + 1, "invalid merge name '" + mg.name + "'");
    }
    if (merges.count(mg.name)) {
      return Fail("merges", k + 1, "duplicate merge name '" + mg.name + "'");
    }
    if (subst.IsMember(mg.first) || subst.IsMember(mg.second)) {
      return Fail("merges", k + 1, "label already belongs to another merge");
    }
    const MergeVerdict mv = CheckMerge(form, mg);
    if (!mv.valid) return Fail("merges", k + 1, mv.reason);
    if (mg.zero && !zeros.count(*mg.zero)) {
      return Fail("merges", k + 1,
                  "companion " + ToString(*mg.zero) + " is not a declared zero");
    }
    merges[mg.name] = &mg;
    subst.Add(mg.first, mg.name);
    subst.Add(mg.second, mg.name);
  }

  auto label_ok = [&](const Label& l) {
    if (const auto* p = std::get_if<PureLabel>(&l)) return InBounds(*p, form);
    return merges.count(std::get<std::string>(l)) != 0;
  };

  std::vector<LabelPair> concluded;
  std::set<LabelPair> concluded_set;
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const std::size_t idx = s + 1;
    const CertStep& st = cert.steps[s];
    if (!label_ok(st.first) || !label_ok(st.second)) {
      return Fail("steps", idx, "unknown or out-of-bounds label");
    }
    if (!st.monomial.InBounds(form.m(), form.n())) {
      return Fail("steps", idx, "monomial out of bounds");
    }
    const Rational c = form.Coefficient(st.monomial);
    if (sgn(c) != 0) {
      return Fail("steps", idx,
                  "cited monomial " + ToString(st.monomial) +
                      " is present with coefficient " + ToString(c));
    }
    const LabelPair claim = Unordered(subst(st.first), subst(st.second));
    if (claim.first == claim.second) {
      return Fail("steps", idx, "degenerate pair " + PairText(claim));
    }
    const auto products = GramProducts(st.monomial);
    switch (st.rule) {
      case StepRule::kDirect: {
        if (products.size() != 1) {
          return Fail("steps", idx,
                      "direct rule needs a single product but " +
                          ToString(st.monomial) + " expands to two");
        }
        if (subst(products[0]) != claim) {
          return Fail("steps", idx,
                      ToString(st.monomial) + " yields " +
                          PairText(subst(products[0])) + ", not " +
                          PairText(claim));
        }
        break;
      }
      case StepRule::kViaZero: {
        if (!st.zero) return Fail("steps", idx, "via-zero step without a zero label");
        if (!zeros.count(*st.zero)) {
          return Fail("steps", idx,
                      ToString(*st.zero) + " is not a declared zero");
        }
        if (products.size() != 2) {
          return Fail("steps", idx, "via-zero rule needs two products");
        }
        bool ok = false;
        for (int z = 0; z < 2 && !ok; ++z) {
          ok = Contains(products[z], *st.zero) && subst(products[1 - z]) == claim;
        }
        if (!ok) {
          return Fail("steps", idx,
                      "zero " + ToString(*st.zero) + " does not reduce " +
                          ToString(st.monomial) + " to " + PairText(claim));
        }
        break;
      }
      case StepRule::kViaKnown: {
        if (!st.known || *st.known < 1 || *st.known >= idx) {
          return Fail("steps", idx,
                      "via-known must reference a strictly earlier step");
        }
        if (products.size() != 2) {
          return Fail("steps", idx, "via-known rule needs two products");
        }
        const LabelPair& known = concluded[*st.known - 1];
        bool ok = false;
        for (int z = 0; z < 2 && !ok; ++z) {
          ok = subst(products[z]) == known && subst(products[1 - z]) == claim;
        }
        if (!ok) {
          return Fail("steps", idx,
                      "step " + std::to_string(*st.known) + " (" +
                          PairText(known) + ") does not reduce " +
                          ToString(st.monomial) + " to " + PairText(claim));
        }
        break;
      }
    }
    concluded.push_back(claim);
    concluded_set.insert(claim);
  }

  std::vector<Label> members;
  for (std::size_t k = 0; k < cert.orthogonal_set.size(); ++k) {
    const Label& raw = cert.orthogonal_set[k];
    if (!label_ok(raw)) {
      return Fail("orthogonal_set", k + 1, "unknown or out-of-bounds label");
    }
    const Label l = subst(raw);
    if (std::find(members.begin(), members.end(), l) != members.end()) {
      return Fail("orthogonal_set", k + 1,
                  ToString(raw) + " duplicates an earlier direction");
    }
    std::vector<PureLabel> needs;
    if (const auto* p = std::get_if<PureLabel>(&l)) {
      needs.push_back(*p);
    } else {
      const Merge* mg = merges.at(std::get<std::string>(l));
      needs = {mg->first, mg->second};
    }
    for (const PureLabel& p : needs) {
      if (!norms.count(p)) {
        return Fail("orthogonal_set", k + 1,
                    "no positive norm fact for " + ToString(p));
      }
    }
    members.push_back(l);
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const LabelPair p = Unordered(members[a], members[b]);
      if (!concluded_set.count(p)) {
        return Fail("orthogonal_set", b + 1,
                    "no step concludes " + PairText(p) + " = 0");
      }
    }
  }
  if (static_cast<long>(members.size()) <= cert.rank) {
    return Fail("rank", 0,
                "orthogonal set of size " + std::to_string(members.size()) +
                    " does not exceed rank " + std::to_string(cert.rank));
  }
  CertVerdict v;
  v.valid = true;
  v.orthogonal_set_size = members.size();
  return v;
}

namespace {

constexpr std::string_view kBuiltinCertificate = R"(# Eight-square form: no representation with seven squares.
dims: 4 3
form: x1^2*y1^2 + x1^2*y2^2 + x1^2*y3^2 + 2*x1*x4*y2*y3 + x2^2*y2^2 + x2^2*y3^2 + x3^2*y1^2 + x3^2*y3^2 + x4^2*y1^2 + x4^2*y2^2
rank: 7
zeros: v21 v32 v43
norms: v11=1 v12=1 v13=1 v22=1 v23=1 v31=1 v33=1 v41=1 v42=1
merges:
  w = v13 v42 by x1*x4*y2*y3 zero v43
steps:
  x1^2*y1*y3 direct w v11
  x1^2*y2*y3 direct w v12
  x2*x4*y2^2 direct w v22
  x1*x3*y3^2 direct w v33
  x4^2*y1*y2 direct w v41
  x1*x2*y3^2 direct w v23
  x1^2*y1*y2 direct v11 v12
  x1*x3*y1^2 direct v11 v31
  x1*x4*y1^2 direct v11 v41
  x1*x2*y2^2 direct v12 v22
  x2^2*y2*y3 direct v22 v23
  x2*x3*y3^2 direct v23 v33
  x3^2*y1*y3 direct v33 v31
  x3*x4*y1^2 direct v31 v41
  x3*x4*y1*y2 via-zero w v31 zero v32
  x1*x2*y1*y2 via-zero v11 v22 zero v21
  x1*x2*y1*y3 via-zero v11 v23 zero v21
  x1*x3*y1*y3 via-known v11 v33 step 15
  x1*x3*y1*y2 via-zero v12 v31 zero v32
  x1*x3*y2*y3 via-zero v12 v33 zero v32
  x1*x4*y1*y2 via-known v12 v41 step 1
  x1*x2*y2*y3 via-known v12 v23 step 3
  x2*x3*y1*y2 via-zero v22 v31 zero v21
  x2*x3*y2*y3 via-zero v22 v33 zero v32
  x2*x4*y1*y2 via-zero v22 v41 zero v21
  x2*x3*y1*y3 via-zero v23 v31 zero v21
  x2*x4*y1*y3 via-zero v23 v41 zero v21
  x3*x4*y1*y3 via-zero v33 v41 zero v43
orthogonal_set: w v11 v12 v22 v23 v31 v33 v41
)";

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

PureLabel ParsePure(const std::string& tok) {
  if (!IsPureLabelText(tok)) {
    throw ParseError("expected pure label v<row><col>, found '" + tok + "'", 0);
  }
  return PureLabel{tok[1] - '0', tok[2] - '0'};
}

Label ParseLabel(const std::string& tok) {
  if (IsPureLabelText(tok)) return ParsePure(tok);
  if (!IsIdentifier(tok)) throw ParseError("invalid label '" + tok + "'", 0);
  return tok;
}

StepRule ParseRule(const std::string& tok) {
  if (tok == "direct") return StepRule::kDirect;
  if (tok == "via-zero") return StepRule::kViaZero;
  if (tok == "via-known") return StepRule::kViaKnown;
  throw ParseError("unknown rule tag '" + tok + "'", 0);
}

std::string_view AfterColon(std::string_view line) {
  return line.substr(line.find(':') + 1);
}

}  // namespace

OrthogonalityCertificate BuiltinQCertificate() {
  return ParseCertificate(kBuiltinCertificate);
}

std::string FormatCertificate(const OrthogonalityCertificate& cert) {
  std::ostringstream out;
  out << "dims: " << cert.form.m() << " " << cert.form.n() << "\n";
  out << "form: " << FormatForm(cert.form) << "\n";
  out << "rank: " << cert.rank << "\n";
  out << "zeros:";
  for (const PureLabel& p : cert.zeros) out << " " << ToString(p);
  out << "\nnorms:";
  for (const NormFact& f : cert.norms) {
    out << " " << ToString(f.label) << "=" << ToString(f.value);
  }
  out << "\nmerges:\n";
  for (const Merge& mg : cert.merges) {
    out << "  " << mg.name << " = " << ToString(mg.first) << " "
        << ToString(mg.second) << " by " << ToString(mg.cross);
    if (mg.zero) out << " zero " << ToString(*mg.zero);
    out << "\n";
  }
  out << "steps:\n";
  for (const CertStep& st : cert.steps) {
    out << "  " << ToString(st.monomial) << " " << ToString(st.rule) << " "
        << ToString(st.first) << " " << ToString(st.second);
    if (st.zero) out << " zero " << ToString(*st.zero);
    if (st.known) out << " step " << *st.known;
    out << "\n";
  }
  out << "orthogonal_set:";
  for (const Label& l : cert.orthogonal_set) out << " " << ToString(l);
  out << "\n";
  return out.str();
}

OrthogonalityCertificate ParseCertificate(std::string_view text) {
  int m = 0, n = 0;
  std::optional<BiquadraticForm> form;
  std::optional<int> rank;
  std::vector<PureLabel> zeros;
  std::vector<NormFact> norms;
  std::vector<Merge> merges;
  std::vector<CertStep> steps;
  std::vector<Label> orth;
  bool have_orth = false;
  enum class Block { kNone, kMerges, kSteps } block = Block::kNone;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto need_dims = [&]() {
    if (m == 0) throw ParseError("'dims:' must precede this line", 0);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (line.front() == '#') continue;
    try {
      if (line.starts_with("dims:")) {
        const auto t = Tokens(AfterColon(line));
        if (t.size() != 2) throw ParseError("dims needs two integers", 0);
        m = std::stoi(t[0]);
        n = std::stoi(t[1]);
        CheckDimensions(m, n);
        block = Block::kNone;
      } else if (line.starts_with("form:")) {
        need_dims();
        form = ParseForm(AfterColon(line), m, n);
        block = Block::kNone;
      } else if (line.starts_with("rank:")) {
        const auto t = Tokens(AfterColon(line));
        if (t.size() != 1) throw ParseError("rank needs one integer", 0);
        rank = std::stoi(t[0]);
        block = Block::kNone;
      } else if (line.starts_with("zeros:")) {
        for (const auto& tok : Tokens(AfterColon(line))) zeros.push_back(ParsePure(tok));
        block = Block::kNone;
      } else if (line.starts_with("norms:")) {
        for (const auto& tok : Tokens(AfterColon(line))) {
          const auto eq = tok.find('=');
          if (eq == std::string::npos) throw ParseError("norm fact needs '='", 0);
          auto value = ParseRational(tok.substr(eq + 1));
          if (!value) throw ParseError("malformed norm value in '" + tok + "'", 0);
          norms.push_back(NormFact{ParsePure(tok.substr(0, eq)), *value});
        }
        block = Block::kNone;
      } else if (line.starts_with("orthogonal_set:")) {
        for (const auto& tok : Tokens(AfterColon(line))) orth.push_back(ParseLabel(tok));
        have_orth = true;
        block = Block::kNone;
      } else if (line == "merges:") {
        block = Block::kMerges;
      } else if (line == "steps:") {
        block = Block::kSteps;
      } else if (block == Block::kMerges) {
        need_dims();
        const auto t = Tokens(line);
        if ((t.size() != 6 && t.size() != 8) || t[1] != "=" || t[4] != "by") {
          throw ParseError(
              "merge line must read '<name> = <pure> <pure> by <monomial> "
              "[zero <pure>]'",
              0);
        }
        if (!IsIdentifier(t[0])) throw ParseError("invalid merge name '" + t[0] + "'", 0);
        Merge mg{t[0], ParsePure(t[2]), ParsePure(t[3]),
                 ParseMonomial(t[5], m, n), std::nullopt};
        if (t.size() == 8) {
          if (t[6] != "zero") throw ParseError("expected 'zero'", 0);
          mg.zero = ParsePure(t[7]);
        }
        merges.push_back(std::move(mg));
      } else if (block == Block::kSteps) {
        need_dims();
        const auto t = Tokens(line);
        if (t.size() < 4) throw ParseError("step line is too short", 0);
        CertStep st{ParseMonomial(t[0], m, n), ParseRule(t[1]),
                    ParseLabel(t[2]), ParseLabel(t[3]), std::nullopt,
                    std::nullopt};
        if (st.rule == StepRule::kDirect) {
          if (t.size() != 4) throw ParseError("direct step takes no reference", 0);
        } else if (st.rule == StepRule::kViaZero) {
          if (t.size() != 6 || t[4] != "zero") {
            throw ParseError("via-zero step needs 'zero <pure>'", 0);
          }
          st.zero = ParsePure(t[5]);
        } else {
          if (t.size() != 6 || t[4] != "step") {
            throw ParseError("via-known step needs 'step <index>'", 0);
          }
          const long k = std::stol(t[5]);
          if (k < 1) throw ParseError("step reference must be positive", 0);
          st.known = static_cast<std::size_t>(k);
        }
        steps.push_back(std::move(st));
      } else {
        throw ParseError("unrecognised line", 0);
      }
    } catch (const ParseError& e) {
      throw ParseError("certificate line " + std::to_string(line_no) + ": " +
                           e.what(),
                       e.position());
    } catch (const std::invalid_argument&) {
      throw ParseError("certificate line " + std::to_string(line_no) +
                           ": malformed integer",
                       0);
    } catch (const std::out_of_range&) {
      throw ParseError("certificate line " + std::to_string(line_no) +
                           ": integer out of range",
                       0);
    }
  }
  if (!form) throw ParseError("certificate has no form section", text.size());
  if (!rank) throw ParseError("certificate has no rank section", text.size());
  if (!have_orth) {
    throw ParseError("certificate has no orthogonal_set section", text.size());
  }
  return OrthogonalityCertificate{std::move(*form), *rank, std::move(zeros),
                                  std::move(norms), std::move(merges),
                                  std::move(steps), std::move(orth)};
}

}  // namespace bqsos
