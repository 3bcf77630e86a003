#pragma once

#include <array>
#include <string>
#include <utility>

#include "superhom/catalog.hpp"

namespace superhom {

// Candidate plane D = span(w1, w2), w1 = Σ p_i y_i, w2 = Σ q_i y_i.
struct PlanePair {
  std::array<Scalar, 4> p;
  std::array<Scalar, 4> q;

  // p_i, q_i as the symbols p1..p4, q1..q4.
  static PlanePair symbolic();
  static PlanePair of(const std::array<Rational, 4>& p, const std::array<Rational, 4>& q);
};

// Coefficient of y1^y2^y3^y4 in w1^w2^w3^w4 with w3 = [w1,w2], w4 = [w1,w3].
Scalar elc(const LieAlgebra4& L, const PlanePair& D);
// Coefficient vector of w1^w2^w3 (zero iff w1, w2, w3 are dependent).
struct EngelFrame {
  Vector4 w1, w2, w3, w4;
};
EngelFrame engel_frame(const LieAlgebra4& L, const PlanePair& D);

// Det(i,j) = p_i q_j - p_j q_i in the symbols p, q.
ParamPolynomial det_pq(int i, int j);
// The closed-form E-l-C printed for each class type.
ParamPolynomial elc_closed_form(int id);
std::string elc_closed_form_text(int id);

struct ElcCheck {
  int id = 0;
  bool matches = false;
  ParamPolynomial computed;
  ParamPolynomial closed_form;
};
ElcCheck elc_formula_check(int id);

struct Witness {
  std::array<Rational, 4> p;
  std::array<Rational, 4> q;
};
Witness reference_witness(int id);

// Admissible (a, b) sample points used when parameters stay symbolic.
std::vector<ClassParams> admissible_samples(int id);

// True iff w1^w2^w3 != 0 and w1^w2^w3^w4 != 0. Unset parameters are
// sampled at admissible points; true when some point works.
bool verify_witness(int id, const std::array<Rational, 4>& p, const std::array<Rational, 4>& q,
                    const ClassParams& params = {});

// (dim D^2, dim D^3) at a rational point.
std::pair<std::size_t, std::size_t> engel_flag_check(const LieAlgebra4& L, const PlanePair& D, const Assignment& at);

// Lines span(alpha y1 + beta y2) in D = span(y1, y2) with [line, D^2] ⊂ D^2,
// D^2 = span(y1, y2, y3).
struct Foliation {
  enum class Kind { AllLines, Line, None } kind = Kind::None;
  std::array<Scalar, 2> direction;  // (alpha, beta) when kind == Line
  std::string describe() const;
};
Foliation characteristic_foliation(const LieAlgebra4& L);
// Re-derives the containment by substituting the answer back.
bool foliation_holds(const LieAlgebra4& L, const Foliation& f);

}  // namespace superhom
