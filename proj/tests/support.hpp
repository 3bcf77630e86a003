#pragma once

#include <random>
#include <vector>

#include "superhom/catalog.hpp"
#include "superhom/complex.hpp"
#include "superhom/error.hpp"
#include "superhom/graded.hpp"

namespace testsupport {

using namespace superhom;

// Small nonzero integers for every parameter, avoiding the nondegeneracy locus.
inline Assignment random_point(const LieAlgebra4& L, std::mt19937_64& rng, int bound = 7) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    Assignment at;
    for (const auto& p : L.parameters()) {
      int v = 0;
      while (v == 0) v = dist(rng);
      at[p] = v;
    }
    bool ok = true;
    for (const auto& n : L.nonzero()) ok = ok && n.eval(at) != 0;
    if (ok) return at;
  }
}

inline Matrix4 random_invertible(std::mt19937_64& rng, int bound = 2) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    Matrix4 g;
    for (auto& row : g)
      for (auto& x : row) x = dist(rng);
    try {
      inverse4(g);
      return g;
    } catch (const Error&) {
    }
  }
}

inline Vector4 random_vector(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Vector4 v;
  for (auto& c : v.c) c = Scalar(Rational(dist(rng)));
  return v;
}

inline Vector4 vec(long a, long b, long c, long d) {
  Vector4 v;
  v.c = {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
  return v;
}

// Every basis element of the letters of a complex.
inline std::vector<GradedElement> basis_of(ComplexKind kind) {
  std::vector<GradedElement> out;
  for (const auto& l : letters(kind)) out.push_back(GradedElement::basis(l.component, l.index));
  return out;
}

inline GradedElement bracket_of(ComplexKind kind, const GradedElement& u, const GradedElement& v, const LieAlgebra4& L) {
  switch (kind) {
    case ComplexKind::Tangent: return schouten_bracket(u, v, L);
    case ComplexKind::Cotangent: return form_bracket(u, v, L);
    case ComplexKind::Extended: return extended_bracket(u, v, L);
  }
  return u;
}

// Sum of two elements that may live in different components; zero operands
// are ignored so that degree overflow (empty components) composes.
inline bool sum_is_zero(const std::vector<GradedElement>& terms) {
  std::vector<GradedElement> acc;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    bool merged = false;
    for (auto& a : acc)
      if (a.component() == t.component()) {
        a += t;
        merged = true;
      }
    if (!merged) acc.push_back(t);
  }
  for (const auto& a : acc)
    if (!a.is_zero()) return false;
  return true;
}

}  // namespace testsupport
