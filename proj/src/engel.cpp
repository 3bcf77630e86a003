#include "superhom/engel.hpp"

#include <algorithm>

#include "superhom/error.hpp"
#include "superhom/graded.hpp"
#include "superhom/poly_matrix.hpp"

namespace superhom {

PlanePair PlanePair::symbolic() {
  PlanePair D;
  for (int i = 0; i < 4; ++i) {
    D.p[i] = ParamFraction::variable("p" + std::to_string(i + 1));
    D.q[i] = ParamFraction::variable("q" + std::to_string(i + 1));
  }
  return D;
}

PlanePair PlanePair::of(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q) {
  PlanePair D;
  for (int i = 0; i < 4; ++i) {
    D.p[i] = Scalar(p[i]);
    D.q[i] = Scalar(q[i]);
  }
  return D;
}

EngelFrame engel_frame(const LieAlgebra4& L, const PlanePair& D) {
  EngelFrame f;
  f.w1.c = D.p;
  f.w2.c = D.q;
  f.w3 = bracket(L, f.w1, f.w2);
  f.w4 = bracket(L, f.w1, f.w3);
  return f;
}

namespace {

GradedElement mv(const Vector4& v) { return GradedElement::from_vector(v); }

GradedElement wedge3(const EngelFrame& f) { return wedge(wedge(mv(f.w1), mv(f.w2)), mv(f.w3)); }

Scalar top_coefficient(const EngelFrame& f) { return wedge(wedge3(f), mv(f.w4))[0]; }

}  // namespace

Scalar elc(const LieAlgebra4& L, const PlanePair& D) { return top_coefficient(engel_frame(L, D)); }

ParamPolynomial det_pq(int i, int j) {
  auto p = [](int k) { return ParamPolynomial::variable("p" + std::to_string(k)); };
  auto q = [](int k) { return ParamPolynomial::variable("q" + std::to_string(k)); };
  return p(i) * q(j) - p(j) * q(i);
}

std::string elc_closed_form_text(int id) {
  static const char* text[] = {
      "p4*Det(3,4)^3",
      "(a-1)^2*p4*Det(1,4)*Det(3,4)^2",
      "p4*Det(1,4)*Det(3,4)^2",
      "p4*Det(3,4)^3",
      "(a-1)*(b-1)*(a-b)*p4*Det(1,4)*Det(2,4)*Det(3,4)",
      "((a-b)^2+1)*p4*Det(1,4)*(Det(2,4)^2+Det(3,4)^2)",
      "Det(3,4)^2*(p4*Det(1,4)+p4*Det(2,3)+p3*Det(3,4))",
      "-2*Det(2,4)*Det(3,4)*(p4*Det(1,4)-p3*Det(2,4)-p2*Det(3,4))",
      "-(b-1)*Det(2,4)*Det(3,4)*(p3*Det(1,4)+b*(p4*Det(1,4)-p2*Det(3,4)))",
      "(Det(2,4)^2+Det(3,4)^2)*(p4*Det(1,4)+p2*Det(2,4)+p3*Det(3,4))",
      "(Det(2,4)^2+Det(3,4)^2)*(a^2*p4*Det(1,4)+a*p4*Det(2,3)+p4*Det(1,4)+p2*Det(2,4)+p3*Det(3,4))",
      "p4*Det(3,4)*(Det(1,3)^2+Det(1,4)^2+Det(2,3)^2+Det(2,4)^2+2*Det(1,2)*Det(3,4))",
  };
  if (id < 1 || id > kClassTypeCount) throw Error(ErrorCode::InvalidArgument, "class type id must be 1..12");
  return text[id - 1];
}

ParamPolynomial elc_closed_form(int id) {
  // Expand Det(i,j) textually, then parse.
  std::string s = elc_closed_form_text(id), out;
  for (std::size_t k = 0; k < s.size();) {
    if (s.compare(k, 4, "Det(") == 0) {
      int i = s[k + 4] - '0', j = s[k + 6] - '0';
      out += "(" + det_pq(i, j).to_string() + ")";
      k += 8;
    } else {
      out += s[k++];
    }
  }
  return ParamPolynomial::parse(out);
}

ElcCheck elc_formula_check(int id) {
  ElcCheck r;
  r.id = id;
  Scalar v = elc(class_type(id), PlanePair::symbolic());
  r.computed = v.numerator();
  r.closed_form = elc_closed_form(id);
  r.matches = v.is_polynomial() && r.computed == r.closed_form;
  return r;
}

Witness reference_witness(int id) {
  static const int table[12][8] = {
      {0, 0, 0, 1, 0, 0, 1, 0}, {0, 0, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1, 0},
      {0, 0, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 1, 1, 1, 0}, {0, 0, 1, 1, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 1, 1, 0},
      {1, 1, 1, 1, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 0, 1, 0}, {0, 0, 1, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 1, 1, 0},
  };
  if (id < 1 || id > kClassTypeCount) throw Error(ErrorCode::InvalidArgument, "class type id must be 1..12");
  Witness w;
  for (int i = 0; i < 4; ++i) {
    w.p[i] = table[id - 1][i];
    w.q[i] = table[id - 1][4 + i];
  }
  return w;
}

std::vector<ClassParams> admissible_samples(int id) {
  const Rational a_vals[5] = {Rational(2), Rational(-3), Rational(1, 2), Rational(5), Rational(-1, 7)};
  Rational b_vals[5] = {Rational(3), Rational(-2), Rational(1, 3), Rational(7), Rational(-5, 4)};
  if (id == 6) {
    const Rational v[5] = {Rational(0), Rational(1, 3), Rational(2), Rational(7), Rational(5, 4)};
    std::copy(v, v + 5, b_vals);
  }
  if (id == 9) {
    const Rational v[5] = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-2, 3)};
    std::copy(v, v + 5, b_vals);
  }
  const std::string uses = class_type_parameters(id);
  std::vector<ClassParams> out;
  for (int k = 0; k < 5; ++k) {
    ClassParams cp;
    if (uses.find('a') != std::string::npos) cp.a = a_vals[k];
    if (uses.find('b') != std::string::npos) cp.b = b_vals[k];
    out.push_back(cp);
  }
  return out;
}

bool verify_witness(int id, const std::array<Rational, 4>& p, const std::array<Rational, 4>& q,
                    const ClassParams& params) {
  check_class_params(id, params);
  const PlanePair D = PlanePair::of(p, q);
  const EngelFrame f = engel_frame(class_type(id, params), D);
  const GradedElement w123 = wedge3(f);
  const Scalar top = top_coefficient(f);
  std::vector<std::string> free_params;
  if (class_type_parameters(id).find('a') != std::string::npos && !params.a) free_params.push_back("a");
  if (class_type_parameters(id).find('b') != std::string::npos && !params.b) free_params.push_back("b");
  if (free_params.empty()) return !w123.is_zero() && !top.is_zero();
  for (const auto& s : admissible_samples(id)) {
    Assignment at;
    if (!params.a && s.a) at["a"] = *s.a;
    if (!params.b && s.b) at["b"] = *s.b;
    if (!w123.substitute(at).is_zero() && !top.substitute(at).is_zero()) return true;
  }
  return false;
}

std::pair<std::size_t, std::size_t> engel_flag_check(const LieAlgebra4& L, const PlanePair& D, const Assignment& at) {
  const LieAlgebra4 Ls = L.substitute(at);
  PointEvaluator ev(at);
  Vector4 w1, w2;
  for (int i = 0; i < 4; ++i) {
    w1.c[i] = Scalar(ev(D.p[i]));
    w2.c[i] = Scalar(ev(D.q[i]));
  }
  auto to_row = [&](const Vector4& v) {
    RationalVector r(4);
    for (int i = 0; i < 4; ++i) r[i] = ev(v.c[i]);
    return r;
  };
  std::vector<Vector4> d2 = {w1, w2, bracket(Ls, w1, w2)};
  RationalMatrix m2;
  for (const auto& v : d2) m2.push_back(to_row(v));
  std::vector<Vector4> d3 = d2;
  for (std::size_t i = 0; i < d2.size(); ++i)
    for (std::size_t j = i + 1; j < d2.size(); ++j) d3.push_back(bracket(Ls, d2[i], d2[j]));
  RationalMatrix m3;
  for (const auto& v : d3) m3.push_back(to_row(v));
  return {rational_rank(m2), rational_rank(m3)};
}

namespace {

std::string axis_term(const Scalar& x, const char* y, bool first) {
  if (x.is_zero()) return "";
  std::string s = x.to_string();
  bool compound = x.numerator().term_count() > 1 && x.is_polynomial();
  bool neg = !compound && s.front() == '-';
  if (neg) s.erase(0, 1);
  std::string out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (compound) s = "(" + s + ")";
  return out + (s == "1" ? std::string(y) : s + "*" + y);
}

// y4-coefficients of [y1, y_k] and [y2, y_k] for k = 1..3.
std::array<std::array<Scalar, 2>, 3> foliation_conditions(const LieAlgebra4& L) {
  std::array<std::array<Scalar, 2>, 3> rows;
  for (int k = 1; k <= 3; ++k) rows[k - 1] = {L.c(1, k, 4), L.c(2, k, 4)};
  return rows;
}

}  // namespace

std::string Foliation::describe() const {
  switch (kind) {
    case Kind::AllLines: return "all (alpha, beta)";
    case Kind::None: return "none";
    case Kind::Line: {
      std::string a = axis_term(direction[0], "y1", true);
      std::string b = axis_term(direction[1], "y2", a.empty());
      return "span(" + a + b + ")";
    }
  }
  return "";
}

Foliation characteristic_foliation(const LieAlgebra4& L) {
  const auto rows = foliation_conditions(L);
  PolyMatrix M(3, 2);
  std::array<std::array<ParamPolynomial, 2>, 3> cleared;
  for (std::size_t r = 0; r < 3; ++r) {
    Monomial den = Monomial::lcm(rows[r][0].denominator(), rows[r][1].denominator());
    for (std::size_t c = 0; c < 2; ++c) {
      cleared[r][c] = rows[r][c].numerator().times_monomial(den / rows[r][c].denominator());
      M.set(r, c, cleared[r][c]);
    }
  }
  Foliation f;
  const std::size_t rank = symbolic_rank(M);
  if (rank == 0) {
    f.kind = Foliation::Kind::AllLines;
  } else if (rank == 2) {
    f.kind = Foliation::Kind::None;
  } else {
    for (const auto& row : cleared) {
      if (row[0].is_zero() && row[1].is_zero()) continue;
      f.kind = Foliation::Kind::Line;
      f.direction = {Scalar(row[1]), Scalar(-row[0])};
      break;
    }
  }
  return f;
}

bool foliation_holds(const LieAlgebra4& L, const Foliation& f) {
  const auto rows = foliation_conditions(L);
  if (f.kind == Foliation::Kind::AllLines) {
    for (const auto& r : rows)
      if (!r[0].is_zero() || !r[1].is_zero()) return false;
    return true;
  }
  if (f.kind == Foliation::Kind::None) return false;
  Vector4 ell;
  ell.c[0] = f.direction[0];
  ell.c[1] = f.direction[1];
  if (ell.is_zero()) return false;
  for (int k = 1; k <= 3; ++k)
    if (!bracket(L, ell, Vector4::basis(k)).c[3].is_zero()) return false;
  return true;
}

}  // namespace superhom
