#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "superhom/catalog.hpp"
#include "superhom/complex.hpp"
#include "superhom/engel.hpp"
#include "superhom/error.hpp"
#include "superhom/report_io.hpp"

using namespace superhom;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerification = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

// "k=v,k=v" -> assignment.
Assignment parse_assignment(const std::string& text) {
  Assignment at;
  if (text.empty()) return at;
  for (const auto& kv : split(text, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got '" + kv + "'");
    at[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
  }
  return at;
}

ClassParams parse_class_params(const std::vector<std::string>& items) {
  ClassParams cp;
  for (const auto& item : items) {
    for (const auto& [k, v] : parse_assignment(item)) {
      if (k == "a")
        cp.a = v;
      else if (k == "b")
        cp.b = v;
      else
        throw UsageError("unknown class-type parameter '" + k + "'");
    }
  }
  return cp;
}

LieAlgebra4 load_inline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  try {
    if (j.value("basis_dim", 4) != 4) throw Error(ErrorCode::Parse, "basis_dim must be 4");
    LieAlgebra4 L;
    for (const auto& b : j.at("brackets")) {
      int i = b.at("i"), k = b.at("j");
      const auto& co = b.at("coeffs");
      if (co.size() != 4) throw Error(ErrorCode::Parse, "coeffs must have 4 entries");
      Vector4 v;
      for (int m = 0; m < 4; ++m)
        v.c[m] = co[m].is_string() ? ParamFraction::parse(co[m].get<std::string>())
                                   : ParamFraction::parse(co[m].dump());
      if (i < 1 || k < 1 || i > 4 || k > 4 || i == k) throw Error(ErrorCode::Parse, "bracket indices out of range");
      if (i < k)
        L.set_bracket(i, k, v);
      else
        L.set_bracket(k, i, Scalar(-1) * v);
    }
    if (j.contains("nonzero"))
      for (const auto& n : j.at("nonzero")) L.add_nonzero(ParamPolynomial::parse(n.get<std::string>()));
    L.origin.source = "inline";
    L.origin.params["file"] = path;
    return L;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

struct Selector {
  int family = 0;
  int type = 0;
  bool ansatz = false;
  std::string inline_file;
  std::vector<std::string> params;

  void attach(CLI::App* app, bool with_ansatz) {
    auto* f = app->add_option("--family", family, "Engel-type family id (1..6)")->check(CLI::Range(1, kFamilyCount));
    auto* t = app->add_option("--type", type, "class type id (1..12)")->check(CLI::Range(1, kClassTypeCount));
    auto* i = app->add_option("--inline", inline_file, "JSON structure-constant file");
    app->add_option("--param", params, "class-type parameter, e.g. a=2");
    f->excludes(t, i);
    t->excludes(i);
    if (with_ansatz) app->add_flag("--ansatz", ansatz, "the unconstrained Engel ansatz")->excludes(f, t, i);
  }

  LieAlgebra4 load() const {
    int n = (family != 0) + (type != 0) + !inline_file.empty() + ansatz;
    if (n != 1) throw UsageError("exactly one of --family, --type, --inline" + std::string(ansatz ? ", --ansatz" : "") +
                                 " is required");
    if (!params.empty() && type == 0) throw UsageError("--param applies to --type only");
    if (family) return superhom::family(family);
    if (type) return class_type(type, parse_class_params(params));
    if (ansatz) return engel_ansatz();
    return load_inline(inline_file);
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string bracket_lines(const LieAlgebra4& L) {
  std::string s;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      s += "[y" + std::to_string(i) + ",y" + std::to_string(j) + "] = " + L.bracket_basis(i, j).to_string() + "\n";
  return s;
}

json algebra_json(const LieAlgebra4& L) {
  json j;
  j["basis_dim"] = 4;
  j["brackets"] = json::array();
  for (int i = 1; i <= 4; ++i)
    for (int k = i + 1; k <= 4; ++k) {
      json co = json::array();
      for (const auto& c : L.bracket_basis(i, k).c) co.push_back(c.to_string());
      j["brackets"].push_back({{"i", i}, {"j", k}, {"coeffs", co}});
    }
  j["parameters"] = L.parameters();
  json nz = json::array();
  for (const auto& p : L.nonzero()) nz.push_back(p.to_string());
  j["nonzero"] = nz;
  return j;
}

int run_families(const std::string& action, int id, const std::string& format) {
  if (action == "list") {
    for (int k = 1; k <= kFamilyCount; ++k) std::cout << k << "  " << family_alphabet(k) << "\n";
    return kOk;
  }
  if (action == "dump") {
    json j;
    for (int k = 1; k <= kFamilyCount; ++k) j["families"].push_back(algebra_json(family(k)));
    for (int k = 1; k <= kClassTypeCount; ++k) {
      json t = algebra_json(class_type(k));
      t["constraint"] = class_type_constraint(k);
      j["class_types"].push_back(t);
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  if (action == "show") {
    if (id < 1 || id > kFamilyCount) throw UsageError("families show needs an id in 1..6");
    const LieAlgebra4 L = family(id);
    if (format == "json") {
      std::cout << algebra_json(L).dump(2) << "\n";
      return kOk;
    }
    std::cout << "family " << id << "  parameters: " << family_alphabet(id) << "\n" << bracket_lines(L);
    for (const auto& p : L.nonzero()) std::cout << "assume " << p.to_string() << " != 0\n";
    return kOk;
  }
  throw UsageError("unknown families action '" + action + "'");
}

int run_jacobi(const Selector& sel, const std::string& format) {
  const LieAlgebra4 L = sel.load();
  const auto res = jacobi_residuals(L);
  bool all_zero = true, any_constant = false;
  for (const auto& r : res) {
    if (r.value.is_zero()) continue;
    all_zero = false;
    if (r.value.numerator().is_constant()) any_constant = true;
  }
  // A nonzero constant residual can never vanish; symbolic ones are constraints.
  const std::string verdict = all_zero ? "PASS" : (any_constant ? "FAIL" : "OPEN");
  if (format == "json") {
    json j;
    j["algebra"] = describe_algebra(L.origin);
    j["residuals"] = json::array();
    for (const auto& r : res)
      j["residuals"].push_back({{"triple", {r.i, r.j, r.k}}, {"coord", r.m}, {"value", r.value.to_string()}});
    j["verdict"] = verdict;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << describe_algebra(L.origin) << "\n";
    std::size_t open = 0;
    for (const auto& r : res) {
      if (r.value.is_zero()) continue;
      ++open;
      std::cout << "J(" << r.i << "," << r.j << "," << r.k << ")_y" << r.m << " = " << r.value.to_string() << "\n";
    }
    std::cout << "nonzero residuals: " << open << " of " << res.size() << "\n";
    std::cout << "verdict: " << verdict << "\n";
  }
  return verdict == "FAIL" ? kVerification : kOk;
}

struct BettiOptions {
  std::string complex = "tangent";
  std::string weights;
  std::string format = "table";
  std::string specialize;
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  unsigned trials = 3;
  long range = 10000;
  bool symbolic = false;
  bool paper_table = false;
};

int run_betti(const Selector& sel, const BettiOptions& o) {
  if (o.format != "table" && o.format != "json" && o.format != "csv") throw UsageError("format must be table|json|csv");
  if (o.weights.empty()) throw UsageError("--weights is required");
  std::vector<int> weights;
  for (const auto& w : split(o.weights, ',')) {
    try {
      std::size_t used = 0;
      weights.push_back(std::stoi(w, &used));
      if (used != w.size()) throw std::invalid_argument(w);
    } catch (const std::logic_error&) {
      throw UsageError("invalid weight '" + w + "'");
    }
  }
  const ComplexKind kind = parse_kind(o.complex);
  LieAlgebra4 L = sel.load();
  const Assignment at = parse_assignment(o.specialize);
  if (!at.empty()) {
    AlgebraOrigin origin = L.origin;
    L = L.substitute(at);
    L.origin = origin;
  }
  RankMode mode = Randomized{o.seed, o.trials, o.range};
  if (o.symbolic) mode = SymbolicGeneric{};
  // A fully specialized L still runs in Randomized mode: with no free
  // parameters the evaluation is exact and the seed stays in the report.

  std::string out;
  json all = json::array();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    BettiReport r = homology_report(kind, weights[k], L, mode);
    if (!at.empty()) r.specialization = at;
    if (o.format == "json")
      all.push_back(to_json(r));
    else if (o.format == "csv")
      out += to_csv(r);
    else
      out += (k ? "\n" : "") + to_table(r, o.paper_table);
  }
  if (o.format == "json") out = (weights.size() == 1 ? all[0] : all).dump(2) + "\n";
  emit(out, o.output);
  return kOk;
}

// "p=0,0,0,1;q=1,0,1,0"
Witness parse_witness(const std::string& text) {
  Witness w;
  bool have_p = false, have_q = false;
  for (const auto& part : split(text, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("witness must look like p=..;q=..");
    const std::string key = part.substr(0, eq);
    const auto vals = split(part.substr(eq + 1), ',');
    if (vals.size() != 4) throw UsageError("witness vectors need 4 entries");
    auto& dst = key == "p" ? w.p : key == "q" ? w.q : throw UsageError("witness key must be p or q");
    for (int i = 0; i < 4; ++i) dst[i] = parse_rational(vals[i]);
    (key == "p" ? have_p : have_q) = true;
  }
  if (!have_p || !have_q) throw UsageError("witness needs both p and q");
  return w;
}

int run_elc(int type, bool symbolic, const std::string& witness, const std::vector<std::string>& params,
            const std::string& format) {
  if (type < 1 || type > kClassTypeCount) throw UsageError("--type must be in 1..12");
  if (symbolic == !witness.empty()) throw UsageError("give exactly one of --symbolic, --witness");
  if (symbolic) {
    const ElcCheck c = elc_formula_check(type);
    if (format == "json") {
      json j;
      j["type"] = type;
      j["closed_form"] = elc_closed_form_text(type);
      j["computed"] = c.computed.to_string();
      j["matches"] = c.matches;
      if (!c.matches) j["closed_form_expanded"] = c.closed_form.to_string();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << elc_closed_form_text(type) << "\n";
      std::cout << "computed: " << c.computed.to_string() << "\n";
      std::cout << (c.matches ? "closed form: MATCH" : "closed form: MISMATCH") << "\n";
      if (!c.matches) std::cout << "closed form expanded: " << c.closed_form.to_string() << "\n";
    }
    return c.matches ? kOk : kVerification;
  }
  const Witness w = parse_witness(witness);
  const bool ok = verify_witness(type, w.p, w.q, parse_class_params(params));
  if (format == "json") {
    json j;
    j["type"] = type;
    for (int i = 0; i < 4; ++i) {
      j["p"].push_back(to_string(w.p[i]));
      j["q"].push_back(to_string(w.q[i]));
    }
    j["result"] = ok ? "NONZERO" : "ZERO";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (ok ? "NONZERO" : "ZERO") << "\n";
  }
  return ok ? kOk : kVerification;
}

int run_foliation(const Selector& sel, const std::string& format) {
  const LieAlgebra4 L = sel.load();
  const Foliation f = characteristic_foliation(L);
  const bool holds = f.kind != Foliation::Kind::None && foliation_holds(L, f);
  if (format == "json") {
    json j;
    j["algebra"] = describe_algebra(L.origin);
    j["kind"] = f.kind == Foliation::Kind::AllLines ? "all" : f.kind == Foliation::Kind::Line ? "line" : "none";
    j["description"] = f.describe();
    if (f.kind == Foliation::Kind::Line) j["direction"] = {f.direction[0].to_string(), f.direction[1].to_string()};
    j["containment_holds"] = holds;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << f.describe() << "\n";
    if (f.kind != Foliation::Kind::None && !holds) std::cout << "containment check: FAIL\n";
  }
  return holds ? kOk : kVerification;
}

int run_strata(const Selector& sel, const std::string& complex, int weight, unsigned m, const std::string& point) {
  const LieAlgebra4 L = sel.load();
  const Assignment at = parse_assignment(point);
  const RankResult r = strata_report(parse_kind(complex), weight, m, L, at);
  std::cout << "rank " << r.rank << "  kernel " << r.kernel_dim << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted super-homology of 4-dimensional Engel-type Lie algebras"};
  app.require_subcommand(1);

  std::string fam_action;
  int fam_id = 0;
  std::string fam_format = "text";
  auto* fam = app.add_subcommand("families", "list, show or dump the family catalog");
  fam->add_option("action", fam_action, "list | show | dump")->required();
  fam->add_option("id", fam_id, "family id for show");
  fam->add_option("--format", fam_format, "text | json");

  Selector jsel;
  std::string jformat = "text";
  auto* jac = app.add_subcommand("jacobi", "Jacobi residuals of an algebra");
  jsel.attach(jac, true);
  jac->add_option("--format", jformat, "text | json");

  Selector bsel;
  BettiOptions bo;
  auto* bet = app.add_subcommand("betti", "weighted homology reports");
  bsel.attach(bet, true);
  bet->add_option("--complex", bo.complex, "tangent | cotangent | extended");
  bet->add_option("--weights", bo.weights, "comma-separated signed weights")->required();
  bet->add_option("--format", bo.format, "table | json | csv");
  bet->add_option("--specialize", bo.specialize, "parameter values name=value,...");
  bet->add_option("--seed", bo.seed, "random seed");
  bet->add_option("--trials", bo.trials, "random trials per rank")->check(CLI::PositiveNumber);
  bet->add_option("--range", bo.range, "random entries drawn from [-range, range]")->check(CLI::PositiveNumber);
  bet->add_flag("--symbolic", bo.symbolic, "exact generic rank by fraction-free elimination");
  bet->add_flag("--paper-table", bo.paper_table, "print |weight| in the header");
  bet->add_option("--output", bo.output, "write to file instead of stdout");

  Selector ssel;
  std::string scomplex = "cotangent", spoint;
  int sweight = 0;
  unsigned sm = 0;
  auto* str = app.add_subcommand("strata", "rank and kernel of one boundary map at a point");
  ssel.attach(str, true);
  str->add_option("--complex", scomplex, "tangent | cotangent | extended");
  str->add_option("--weight", sweight, "signed weight")->required();
  str->add_option("--m", sm, "chain degree")->required();
  str->add_option("--at", spoint, "parameter values name=value,...");

  int etype = 0;
  bool esym = false;
  std::string ewit;
  std::vector<std::string> eparams;
  auto* elc_cmd = app.add_subcommand("elc", "Engel-like coefficient of a class type");
  elc_cmd->add_option("--type", etype, "class type id (1..12)")->required();
  elc_cmd->add_flag("--symbolic", esym, "print and check the closed form");
  elc_cmd->add_option("--witness", ewit, "plane as \"p=..;q=..\"");
  elc_cmd->add_option("--param", eparams, "class-type parameter, e.g. a=2");
  std::string eformat = "text";
  elc_cmd->add_option("--format", eformat, "text | json");

  Selector fsel;
  auto* fol = app.add_subcommand("foliation", "characteristic foliation inside D = span(y1, y2)");
  fsel.attach(fol, true);
  std::string fformat = "text";
  fol->add_option("--format", fformat, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*fam) return run_families(fam_action, fam_id, fam_format);
    if (*jac) return run_jacobi(jsel, jformat);
    if (*bet) return run_betti(bsel, bo);
    if (*str) return run_strata(ssel, scomplex, sweight, sm, spoint);
    if (*elc_cmd) return run_elc(etype, esym, ewit, eparams, eformat);
    if (*fol) return run_foliation(fsel, fformat);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ConstraintViolation:
      case ErrorCode::SingularMatrix: return kVerification;
      case ErrorCode::Parse:
      case ErrorCode::InvalidArgument:
      case ErrorCode::MissingParameter: return kUsage;
      default: return kInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
