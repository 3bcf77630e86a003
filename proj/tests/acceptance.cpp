// Acceptance driver: one PASS/FAIL line per criterion, details indented.
//   acceptance              run every criterion
//   acceptance --criterion N

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reference_tables.hpp"
#include "superhom/catalog.hpp"
#include "superhom/complex.hpp"
#include "superhom/engel.hpp"
#include "superhom/error.hpp"
#include "support.hpp"

using namespace superhom;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& s) {
    pass = false;
    notes.push_back(s);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

std::string where(const reference::Table& t) {
  return kind_name(t.kind) + " weight " + std::to_string(t.weight) + " family " + std::to_string(t.family);
}

// Cell-by-cell comparison; returns the number of mismatching cells.
std::size_t compare(const reference::Table& expect, const BettiReport& got, Outcome& o) {
  std::size_t bad = 0;
  if (got.rows.size() != expect.spad.size() || got.rows.front().m != expect.m0) {
    o.fail(where(expect) + ": row range differs");
    return 1;
  }
  for (std::size_t i = 0; i < got.rows.size(); ++i) {
    const auto& r = got.rows[i];
    auto cell = [&](const char* row, long want, long have) {
      if (want == have) return;
      ++bad;
      o.fail(where(expect) + " m=" + std::to_string(r.m) + " " + row + ": table " + std::to_string(want) +
             ", computed " + std::to_string(have));
    };
    cell("SpaD", static_cast<long>(expect.spad[i]), static_cast<long>(r.dim));
    cell("KerD", static_cast<long>(expect.kerd[i]), static_cast<long>(r.ker));
    cell("Bett", expect.bett[i], r.betti);
  }
  return bad;
}

void report_errata(const std::vector<reference::Table>& tables, Outcome& o) {
  for (const auto& e : reference::errata()) {
    for (const auto& t : tables) {
      if (t.kind != e.kind || t.weight != e.weight || (e.family != 0 && e.family != t.family)) continue;
      o.note("discrepancy: " + kind_name(e.kind) + " weight " + std::to_string(e.weight) +
             (e.family ? " family " + std::to_string(e.family) : std::string(" (all families)")) + " m=" +
             std::to_string(e.m) + " " + e.row + " printed " + std::to_string(e.printed) + ", computed " +
             std::to_string(e.corrected));
      break;
    }
  }
}

Outcome table_criterion(const std::vector<reference::Table>& tables) {
  Outcome o;
  std::size_t bad = 0;
  for (const auto& t : tables) {
    const BettiReport r = homology_report(t.kind, t.weight, family(t.family), Randomized{});
    bad += compare(reference::corrected(t), r, o);
  }
  report_errata(tables, o);
  o.note(std::to_string(tables.size()) + " reports, " + std::to_string(bad) + " mismatching cells");
  return o;
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = table_criterion(reference::tangent());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << "runtime " << secs << " s";
  o.note(s.str());
  if (secs >= 60) o.fail("runtime over one minute");
  return o;
}

Outcome criterion2() { return table_criterion(reference::extended()); }

Outcome criterion3() { return table_criterion(reference::cotangent()); }

std::string signature(const BettiReport& r) {
  std::ostringstream s;
  for (const auto& row : r.rows) s << row.m << ':' << row.dim << '/' << row.ker << '/' << row.betti << ' ';
  return s.str();
}

Outcome criterion4() {
  Outcome o;
  std::vector<std::size_t> d;
  for (unsigned m = 1; m <= 5; ++m) d.push_back(chain_basis(ComplexKind::Cotangent, -5, m).dimension());
  if (d != std::vector<std::size_t>{1, 28, 12, 4, 1}) o.fail("chain dims " + join(d));
  if (chain_basis(ComplexKind::Cotangent, -5, 6).dimension() != 0) o.fail("nonempty chain space at m=6");
  std::map<std::string, std::vector<int>> classes;
  for (int f = 1; f <= kFamilyCount; ++f) {
    const BettiReport r = homology_report(ComplexKind::Cotangent, -5, family(f), Randomized{});
    std::vector<long> b;
    for (const auto& row : r.rows) b.push_back(row.betti);
    o.note("family " + std::to_string(f) + " Bett " + join(b));
    classes[signature(r)].push_back(f);
  }
  std::set<std::vector<int>> got;
  for (const auto& [k, v] : classes) got.insert(v);
  const std::set<std::vector<int>> want = {{1}, {2, 3, 4}, {5, 6}};
  std::string desc;
  for (const auto& c : got) desc += "{" + join(c) + "} ";
  o.note("classes " + desc);
  if (got != want) o.fail("partition differs from {1} {2 3 4} {5 6}");
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto check = [&](int f, const Assignment& at, std::size_t rank, std::size_t ker) {
    const RankResult r = strata_report(ComplexKind::Cotangent, -5, 2, family(f), at);
    std::string pt;
    for (const auto& [k, v] : at) pt += k + "=" + v.get_str() + " ";
    const std::string line = "family " + std::to_string(f) + " at " + pt + "rank " + std::to_string(r.rank) +
                             " kernel " + std::to_string(r.kernel_dim);
    if (r.rank == rank && r.kernel_dim == ker)
      o.note(line);
    else
      o.fail(line + " (expected rank " + std::to_string(rank) + " kernel " + std::to_string(ker) + ")");
  };
  check(1, {{"C143", 1}, {"C144", 0}, {"C234", 1}, {"C244", 0}}, 0, 28);
  check(1, {{"C143", 3}, {"C144", 0}, {"C234", -2}, {"C244", 0}}, 0, 28);
  check(4, {{"C231", 1}, {"C234", 1}, {"C244", 0}}, 0, 28);
  check(4, {{"C231", -5}, {"C234", 2}, {"C244", 0}}, 0, 28);
  for (int c : {1, 2, -3, 7}) check(4, {{"C231", 1}, {"C234", 1}, {"C244", c}}, 1, 27);
  const RankResult g = matrix_rank(boundary_matrix(ComplexKind::Cotangent, -5, 2, family(4)), SymbolicGeneric{});
  if (g.kernel_dim != 27) o.fail("family 4 generic kernel " + std::to_string(g.kernel_dim));
  return o;
}

Outcome criterion6() {
  Outcome o;
  using testsupport::bracket_of;
  using testsupport::sum_is_zero;
  const ComplexKind kinds[] = {ComplexKind::Tangent, ComplexKind::Cotangent, ComplexKind::Extended};
  const std::map<ComplexKind, std::vector<int>> tabulated = {{ComplexKind::Tangent, {0, 1, 2}},
                                                            {ComplexKind::Cotangent, {-5, -6, -7}},
                                                            {ComplexKind::Extended, {-2, -3}}};
  std::size_t products = 0;
  for (const auto& [kind, weights] : tabulated)
    for (int w : weights)
      for (int f = 1; f <= kFamilyCount; ++f) {
        const LieAlgebra4 L = family(f);
        const auto [lo, hi] = chain_range(kind, w);
        for (unsigned m = lo + 2; m <= hi; ++m) {
          const PolyMatrix a = boundary_matrix(kind, w, m - 1, L), b = boundary_matrix(kind, w, m, L);
          if (a.cols() == 0 || b.cols() == 0) continue;
          ++products;
          if (!(a * b).is_zero())
            o.fail("boundary^2 != 0: " + kind_name(kind) + " weight " + std::to_string(w) + " family " +
                   std::to_string(f) + " m=" + std::to_string(m));
        }
      }
  o.note(std::to_string(products) + " polynomial boundary products vanish");

  std::size_t triples = 0;
  for (auto kind : kinds) {
    const auto B = testsupport::basis_of(kind);
    for (int f = 1; f <= kFamilyCount; ++f) {
      std::mt19937_64 rng(4242 + f);
      for (int t = 0; t < 2; ++t) {
        const Assignment at = testsupport::random_point(family(f), rng);
        const LieAlgebra4 L = family(f).substitute(at);
        auto par = [](const GradedElement& e) { return e.component().grade() & 1; };
        auto sg = [](int x) { return Scalar((x & 1) ? -1 : 1); };
        auto br = [&](const GradedElement& a, const GradedElement& b) { return bracket_of(kind, a, b, L); };
        const std::string tag = kind_name(kind) + " family " + std::to_string(f);
        for (const auto& u : B)
          for (const auto& v : B) {
            const GradedElement uv = br(u, v);
            if (!uv.is_zero() && uv.component().grade() != u.component().grade() + v.component().grade())
              o.fail("grade additivity: " + tag);
            if (!sum_is_zero({uv, sg(par(u) * par(v)) * br(v, u)})) o.fail("super antisymmetry: " + tag);
            for (const auto& w : B) {
              ++triples;
              if (!sum_is_zero({sg(par(u) * par(w)) * br(uv, w), sg(par(v) * par(u)) * br(br(v, w), u),
                                sg(par(w) * par(v)) * br(br(w, u), v)}))
                o.fail("super Jacobi: " + tag);
            }
          }
      }
    }
  }
  o.note(std::to_string(triples) + " basis triples satisfy super Jacobi");

  std::size_t forms = 0;
  for (int f = 1; f <= kFamilyCount; ++f) {
    const LieAlgebra4 L = family(f);
    std::mt19937_64 rng(99 + f);
    const Assignment at = testsupport::random_point(L, rng);
    const oracle::Table c = oracle::constants(L, at);
    for (const auto& w : testsupport::basis_of(ComplexKind::Cotangent)) {
      if (!ce_differential(ce_differential(w, L), L).is_zero()) o.fail("d^2 != 0 family " + std::to_string(f));
      const int p = w.component().degree;
      oracle::Form fw{};
      for (std::size_t k = 0; k < w.coords().size(); ++k) fw[wedge_basis(p)[k]] = w[k].eval(at);
      for (int i = 1; i <= 4; ++i) {
        std::array<Rational, 4> X{};
        X[i - 1] = 1;
        const oracle::Form expect = oracle::lie_derivative(c, X, fw, p);
        const GradedElement got = lie_derivative(Vector4::basis(i), w, L);
        ++forms;
        for (std::size_t k = 0; k < got.coords().size(); ++k)
          if (got[k].eval(at) != expect[wedge_basis(p)[k]]) o.fail("Cartan vs coordinate, family " + std::to_string(f));
      }
    }
  }
  o.note(std::to_string(forms) + " Lie derivatives match the coordinate formula");

  for (int f = 1; f <= kFamilyCount; ++f) {
    const LieAlgebra4 L = family(f);
    std::mt19937_64 rng(7 + f);
    std::vector<std::size_t> generic(5, 100);
    for (int t = 0; t < 4; ++t) {
      const Assignment at = testsupport::random_point(L, rng);
      const auto ce = oracle::ce_homology(oracle::constants(L, at));
      const BettiReport r = homology_report(ComplexKind::Tangent, 0, L, Specialized{at});
      for (int k = 0; k <= 4; ++k) {
        generic[k] = std::min(generic[k], ce[k].second);
        if (r.rows.at(k).dim != ce[k].first || r.rows.at(k).ker != ce[k].second)
          o.fail("CE oracle mismatch at a point, family " + std::to_string(f));
      }
    }
    const BettiReport g = homology_report(ComplexKind::Tangent, 0, L, Randomized{});
    for (int k = 0; k <= 4; ++k)
      if (g.rows.at(k).ker != generic[k]) o.fail("CE oracle generic mismatch, family " + std::to_string(f));
  }
  o.note("weight 0 tangent matches the classical Chevalley-Eilenberg oracle for families 1..6");
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int id = 1; id <= kClassTypeCount; ++id) {
    const ElcCheck c = elc_formula_check(id);
    if (c.matches) continue;
    // A mismatch is acceptable only with a documented report of what the brackets give.
    if (id == 9) {
      const ParamPolynomial expect =
          ParamPolynomial::parse("-(b-1)") * det_pq(2, 4) * det_pq(3, 4) *
          (ParamPolynomial::parse("p3") * det_pq(2, 4) +
           ParamPolynomial::parse("b") *
               (ParamPolynomial::parse("p4") * det_pq(1, 4) - ParamPolynomial::parse("p2") * det_pq(3, 4)));
      if (c.computed == expect) {
        o.note("discrepancy: Type[9] printed " + elc_closed_form_text(9) +
               "; brackets give -(b-1)*Det(2,4)*Det(3,4)*(p3*Det(2,4)+b*(p4*Det(1,4)-p2*Det(3,4)))");
        continue;
      }
    }
    o.fail("Type[" + std::to_string(id) + "] closed form differs: computed " + c.computed.to_string());
  }
  for (int id = 1; id <= kClassTypeCount; ++id) {
    const Witness w = reference_witness(id);
    if (!verify_witness(id, w.p, w.q)) {
      const Scalar v = elc(class_type(id), PlanePair::of(w.p, w.q));
      o.fail("Type[" + std::to_string(id) + "] witness p=" + join(std::vector<std::string>{
                                                                 w.p[0].get_str(), w.p[1].get_str(), w.p[2].get_str(),
                                                                 w.p[3].get_str()}) +
             " q=" + join(std::vector<std::string>{w.q[0].get_str(), w.q[1].get_str(), w.q[2].get_str(),
                                                   w.q[3].get_str()}) +
             " gives E-l-C " + v.to_string());
    }
  }
  const PlanePair D = PlanePair::symbolic();
  if (!elc(class_type(2, {Rational(1), std::nullopt}), D).is_zero()) o.fail("Type[2] a=1 not identically zero");
  if (!elc(class_type(9, {std::nullopt, Rational(1)}), D).is_zero()) o.fail("Type[9] b=1 not identically zero");
  for (auto [a, b] : {std::pair{1, 3}, std::pair{2, 1}, std::pair{3, 3}, std::pair{1, 1}})
    if (!elc(class_type(5, {Rational(a), Rational(b)}), D).is_zero()) o.fail("Type[5] degenerate (a,b) not zero");
  const ParamPolynomial f5 = elc(class_type(5), D).numerator();
  for (const char* s : {"a - 1", "b - 1", "a - b"}) {
    const ParamPolynomial lin = ParamPolynomial::parse(s);
    (void)f5.exact_divide(lin);
  }
  o.note("no-structure loci give identically zero E-l-C");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int f = 1; f <= kFamilyCount; ++f) {
    const LieAlgebra4 L = family(f);
    const Foliation fol = characteristic_foliation(L);
    const std::string line = "family " + std::to_string(f) + ": " + fol.describe();
    if (!foliation_holds(L, fol)) o.fail(line + " fails the containment check");
    const bool want_all = f == 3;
    const bool ok = want_all ? fol.kind == Foliation::Kind::AllLines
                             : fol.kind == Foliation::Kind::Line && fol.describe() == "span(C234*y1 - y2)";
    if (ok)
      o.note(line);
    else
      o.fail(line + " (expected " + (want_all ? "all (alpha, beta)" : "span(C234*y1 - y2)") + ")");
  }
  return o;
}

struct Spec {
  ComplexKind kind;
  int weight;
};
const Spec kTables[] = {{ComplexKind::Tangent, 0},    {ComplexKind::Tangent, 1},    {ComplexKind::Tangent, 2},
                        {ComplexKind::Cotangent, -5}, {ComplexKind::Cotangent, -6}, {ComplexKind::Cotangent, -7},
                        {ComplexKind::Extended, -2},  {ComplexKind::Extended, -3}};

Outcome criterion9() {
  Outcome o;
  std::size_t reports = 0;
  for (int f = 1; f <= kFamilyCount; ++f) {
    std::mt19937_64 rng(900 + f);
    const LieAlgebra4 L = family(f).substitute(testsupport::random_point(family(f), rng, 3));
    std::vector<std::vector<BettiRow>> base;
    for (const auto& s : kTables) base.push_back(homology_report(s.kind, s.weight, L, Specialized{}).rows);
    for (int t = 0; t < 10; ++t) {
      const LieAlgebra4 M = change_basis(L, testsupport::random_invertible(rng, 1));
      for (std::size_t k = 0; k < std::size(kTables); ++k) {
        ++reports;
        if (homology_report(kTables[k].kind, kTables[k].weight, M, Specialized{}).rows != base[k])
          o.fail("family " + std::to_string(f) + " " + kind_name(kTables[k].kind) + " weight " +
                 std::to_string(kTables[k].weight) + " changed under a basis change");
      }
    }
  }
  o.note(std::to_string(reports) + " reports after basis changes match the original");
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::vector<std::vector<std::vector<BettiRow>>> tables(kFamilyCount + 1);
  for (int f = 1; f <= kFamilyCount; ++f)
    for (const auto& s : kTables) tables[f].push_back(homology_report(s.kind, s.weight, family(f), Randomized{}).rows);
  for (int a = 1; a <= kFamilyCount; ++a)
    for (int b = a + 1; b <= kFamilyCount; ++b) {
      std::string sep;
      for (std::size_t k = 0; k < std::size(kTables) && sep.empty(); ++k)
        if (tables[a][k] != tables[b][k])
          sep = kind_name(kTables[k].kind) + " weight " + std::to_string(kTables[k].weight);
      const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (!sep.empty()) {
        o.note(pair + " separated by " + sep);
        continue;
      }
      o.fail(pair + " identical on every computed table");
    }
  // Why (2,4) cannot separate: both reach the same normal form at rational points.
  const LieAlgebra4 f2 = family(2).substitute({{"C144", 2}, {"C143", 1}, {"C234", 1}, {"C244", 1}});
  const LieAlgebra4 f4 = family(4).substitute({{"C244", 1}, {"C231", -2}, {"C234", 0}});
  Matrix4 g2, g4;
  const long m2[4][4] = {{1, 0, 0, 0}, {0, -24, -2, -2}, {0, -12, 0, 3}, {0, 12, 2, -1}};
  const long m4[4][4] = {{0, 0, -2, -2}, {1, 0, 0, 0}, {0, 0, 2, -1}, {0, 6, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      g2[i][j] = m2[i][j];
      g4[i][j] = m4[i][j];
    }
  if (change_basis(f2, g2) == change_basis(f4, g4))
    o.note("family 2 at C143=1,C144=2,C234=1,C244=1 and family 4 at C231=-2,C234=0,C244=1 are isomorphic "
           "(common normal form [x,e1]=e1, [x,e2]=2e2, [x,f]=-f, [e2,f]=e1)");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> c = {
      {"tangent tables, weights 0 1 2, families 1-6", criterion1},
      {"extended tables, weights -2 -3, families 1-6", criterion2},
      {"cotangent tables, weights -6 -7, families 1-6", criterion3},
      {"cotangent weight -5 dimensions and 3-class partition", criterion4},
      {"weight -5 strata of families 1 and 4", criterion5},
      {"property suite", criterion6},
      {"E-l-C closed forms, witnesses and degenerate loci", criterion7},
      {"characteristic foliations", criterion8},
      {"isomorphism invariance under basis change", criterion9},
      {"pairwise separation of the six families", criterion10},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "criterion must be 1.." << criteria().size() << "\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria()[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria()[i].first << "\n";
    for (const auto& n : o.notes) std::cout << "  " << n << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
