#include "superhom/graded.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "superhom/error.hpp"

namespace superhom {

// ------------------------------------------------------------- components

GradedComponent GradedComponent::multivector(int a) {
  if (a < 0) throw Error(ErrorCode::InvalidArgument, "negative multivector degree");
  return {ComponentKind::MultiVector, a};
}

GradedComponent GradedComponent::form(int p) {
  if (p < 0) throw Error(ErrorCode::DegreeUnderflow, "negative form degree");
  return {ComponentKind::Form, p};
}

int GradedComponent::grade() const {
  switch (kind) {
    case ComponentKind::MultiVector: return degree - 1;
    case ComponentKind::Form: return -(degree + 1);
    case ComponentKind::Vector: return 0;
  }
  return 0;
}

std::size_t GradedComponent::dimension() const {
  if (kind == ComponentKind::Vector) return 4;
  return wedge_basis(degree).size();
}

std::string GradedComponent::name() const {
  switch (kind) {
    case ComponentKind::MultiVector: return std::to_string(degree) + "-vector";
    case ComponentKind::Form: return std::to_string(degree) + "-form";
    case ComponentKind::Vector: return "vector";
  }
  return "";
}

// ------------------------------------------------------------ wedge basis

const std::vector<unsigned>& wedge_basis(int degree) {
  static const std::array<std::vector<unsigned>, 5> table = [] {
    std::array<std::vector<unsigned>, 5> t;
    for (int d = 0; d <= 4; ++d) {
      std::vector<std::vector<int>> tuples;
      for (unsigned m = 0; m < 16; ++m)
        if (std::popcount(m) == d) {
          std::vector<int> idx;
          for (int i = 0; i < 4; ++i)
            if (m & (1u << i)) idx.push_back(i);
          tuples.push_back(idx);
        }
      std::sort(tuples.begin(), tuples.end());
      for (const auto& tup : tuples) {
        unsigned m = 0;
        for (int i : tup) m |= 1u << i;
        t[d].push_back(m);
      }
    }
    return t;
  }();
  static const std::vector<unsigned> empty;
  if (degree < 0 || degree > 4) return empty;
  return table[degree];
}

std::size_t wedge_index(unsigned mask) {
  const auto& b = wedge_basis(std::popcount(mask));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] == mask) return i;
  throw Error(ErrorCode::InvalidArgument, "not a wedge basis mask");
}

int wedge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    if (b & (1u << i)) inversions += std::popcount(a >> (i + 1));
  return (inversions & 1) ? -1 : 1;
}

namespace {

std::vector<int> indices(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

unsigned mask_of(GradedComponent comp, std::size_t index) { return wedge_basis(comp.degree).at(index); }

bool is_exterior(const GradedComponent& c) { return c.kind != ComponentKind::Vector; }

}  // namespace

// ---------------------------------------------------------- GradedElement

GradedElement::GradedElement(GradedComponent comp) : comp_(comp), coords_(comp.dimension()) {}

GradedElement GradedElement::basis(GradedComponent comp, std::size_t index) {
  GradedElement e(comp);
  e.coords_.at(index) = Scalar(1);
  return e;
}

GradedElement GradedElement::from_vector(const Vector4& v, GradedComponent comp) {
  if (comp.dimension() != 4 || comp.kind == ComponentKind::Form)
    throw Error(ErrorCode::InvalidArgument, "vectors live in 1-vectors or the vector part");
  GradedElement e(comp);
  for (int i = 0; i < 4; ++i) e.coords_[i] = v.c[i];
  return e;
}

std::string GradedElement::basis_label(GradedComponent comp, std::size_t index) {
  if (comp.kind == ComponentKind::Vector) return "y" + std::to_string(index + 1);
  unsigned m = mask_of(comp, index);
  if (m == 0) return "1";
  std::string out;
  char letter = comp.kind == ComponentKind::Form ? 'z' : 'y';
  for (int i : indices(m)) {
    if (!out.empty()) out += '^';
    out += letter + std::to_string(i + 1);
  }
  return out;
}

bool GradedElement::is_zero() const {
  for (const auto& x : coords_)
    if (!x.is_zero()) return false;
  return true;
}

Vector4 GradedElement::to_vector() const {
  if (coords_.size() != 4 || comp_.kind == ComponentKind::Form)
    throw Error(ErrorCode::InvalidArgument, "element is not a vector");
  Vector4 v;
  for (int i = 0; i < 4; ++i) v.c[i] = coords_[i];
  return v;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  if (!(comp_ == o.comp_)) throw Error(ErrorCode::MixedKinds, "adding elements of different components");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  if (!(comp_ == o.comp_)) throw Error(ErrorCode::MixedKinds, "subtracting elements of different components");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement r = *this;
  for (auto& x : r.coords_) x = -x;
  return r;
}

GradedElement operator*(const Scalar& s, GradedElement e) {
  for (auto& x : e.coords_) x = s * x;
  return e;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  if (a.comp_ == b.comp_) return a.coords_ == b.coords_;
  return a.is_zero() && b.is_zero();
}

GradedElement GradedElement::substitute(const Assignment& at) const {
  GradedElement r(comp_);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i].substitute(at);
  return r;
}

std::string GradedElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Scalar& x = coords_[i];
    if (x.is_zero()) continue;
    std::string s = x.to_string();
    std::string label = basis_label(comp_, i);
    bool compound = x.numerator().term_count() > 1 && x.is_polynomial();
    bool neg = !compound && s.front() == '-';
    if (neg) s.erase(0, 1);
    if (!out.empty()) {
      out += neg ? " - " : " + ";
    } else if (neg) {
      out += "-";
    }
    if (compound) s = "(" + s + ")";
    if (label == "1") {
      out += s;
    } else {
      out += (s == "1" ? "" : s + " ") + label;
    }
  }
  return out.empty() ? "0" : out;
}

// -------------------------------------------------------------- operations

GradedElement wedge(const GradedElement& u, const GradedElement& v) {
  const auto& cu = u.component();
  const auto& cv = v.component();
  if (cu.kind != cv.kind || !is_exterior(cu))
    throw Error(ErrorCode::MixedKinds, "wedge needs two multivectors or two forms");
  GradedComponent out{cu.kind, cu.degree + cv.degree};
  GradedElement r(out);
  if (out.dimension() == 0) return r;
  for (std::size_t i = 0; i < u.coords().size(); ++i) {
    if (u[i].is_zero()) continue;
    unsigned a = mask_of(cu, i);
    for (std::size_t j = 0; j < v.coords().size(); ++j) {
      if (v[j].is_zero()) continue;
      unsigned b = mask_of(cv, j);
      int s = wedge_sign(a, b);
      if (s == 0) continue;
      Scalar t = u[i] * v[j];
      r[wedge_index(a | b)] += s > 0 ? t : -t;
    }
  }
  return r;
}

namespace {

GradedElement basis_multivector(unsigned mask) {
  return GradedElement::basis(GradedComponent::multivector(std::popcount(mask)), wedge_index(mask));
}

// [X_A, Y_B] = Σ_{a,b} (-1)^{a+b} [y_{A_a}, y_{B_b}] ∧ X_{A∖a} ∧ Y_{B∖b}.
GradedElement schouten_basis(unsigned A, unsigned B, const LieAlgebra4& L) {
  const auto ia = indices(A), ib = indices(B);
  GradedElement r(GradedComponent::multivector(static_cast<int>(ia.size() + ib.size()) - 1));
  if (r.component().dimension() == 0) return r;
  for (std::size_t a = 0; a < ia.size(); ++a)
    for (std::size_t b = 0; b < ib.size(); ++b) {
      Vector4 br = L.bracket_basis(ia[a] + 1, ib[b] + 1);
      if (br.is_zero()) continue;
      GradedElement t = wedge(wedge(GradedElement::from_vector(br), basis_multivector(A & ~(1u << ia[a]))),
                              basis_multivector(B & ~(1u << ib[b])));
      r += ((a + b) & 1) ? -t : t;
    }
  return r;
}

// d z^k = -Σ_{i<j} c_ij^k z^i ∧ z^j.
GradedElement d_one_form(int k, const LieAlgebra4& L) {
  GradedElement r(GradedComponent::form(2));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      Scalar c = L.c(i, j, k);
      if (!c.is_zero()) r[wedge_index((1u << (i - 1)) | (1u << (j - 1)))] -= c;
    }
  return r;
}

GradedElement basis_form(unsigned mask) {
  return GradedElement::basis(GradedComponent::form(std::popcount(mask)), wedge_index(mask));
}

GradedElement d_basis(unsigned mask, const LieAlgebra4& L) {
  const auto idx = indices(mask);
  GradedElement r(GradedComponent::form(static_cast<int>(idx.size()) + 1));
  if (r.component().dimension() == 0) return r;
  unsigned left = 0;
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    unsigned bit = 1u << idx[pos];
    unsigned right = mask & ~left & ~bit;
    GradedElement t = wedge(wedge(basis_form(left), d_one_form(idx[pos] + 1, L)), basis_form(right));
    r += (pos & 1) ? -t : t;
    left |= bit;
  }
  return r;
}

void require_form(const GradedElement& e, const char* what) {
  if (e.component().kind != ComponentKind::Form) throw Error(ErrorCode::MixedKinds, std::string(what) + " needs a form");
}

}  // namespace

GradedElement schouten_bracket(const GradedElement& P, const GradedElement& Q, const LieAlgebra4& L) {
  if (P.component().kind != ComponentKind::MultiVector || Q.component().kind != ComponentKind::MultiVector)
    throw Error(ErrorCode::MixedKinds, "Schouten bracket needs two multivectors");
  GradedElement r(GradedComponent::multivector(P.component().degree + Q.component().degree - 1));
  for (std::size_t i = 0; i < P.coords().size(); ++i) {
    if (P[i].is_zero()) continue;
    for (std::size_t j = 0; j < Q.coords().size(); ++j) {
      if (Q[j].is_zero()) continue;
      r += (P[i] * Q[j]) * schouten_basis(mask_of(P.component(), i), mask_of(Q.component(), j), L);
    }
  }
  return r;
}

GradedElement ce_differential(const GradedElement& omega, const LieAlgebra4& L) {
  require_form(omega, "d");
  GradedElement r(GradedComponent::form(omega.component().degree + 1));
  if (r.component().dimension() == 0) return r;
  for (std::size_t i = 0; i < omega.coords().size(); ++i)
    if (!omega[i].is_zero()) r += omega[i] * d_basis(mask_of(omega.component(), i), L);
  return r;
}

GradedElement form_bracket(const GradedElement& A, const GradedElement& B, const LieAlgebra4& L) {
  require_form(A, "form bracket");
  require_form(B, "form bracket");
  GradedElement r = ce_differential(wedge(A, B), L);
  return (A.component().degree & 1) ? -r : r;
}

GradedElement interior_product(const Vector4& X, const GradedElement& omega) {
  require_form(omega, "interior product");
  const int p = omega.component().degree;
  if (p == 0) throw Error(ErrorCode::DegreeUnderflow, "interior product of a 0-form");
  GradedElement r(GradedComponent::form(p - 1));
  for (std::size_t i = 0; i < omega.coords().size(); ++i) {
    if (omega[i].is_zero()) continue;
    const auto idx = indices(mask_of(omega.component(), i));
    unsigned mask = mask_of(omega.component(), i);
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Scalar& x = X.c[idx[pos]];
      if (x.is_zero()) continue;
      Scalar t = x * omega[i];
      r[wedge_index(mask & ~(1u << idx[pos]))] += (pos & 1) ? -t : t;
    }
  }
  return r;
}

GradedElement lie_derivative(const Vector4& X, const GradedElement& omega, const LieAlgebra4& L) {
  require_form(omega, "Lie derivative");
  GradedElement r(omega.component());
  if (omega.component().degree == 0) return r;
  r += interior_product(X, ce_differential(omega, L));
  r += ce_differential(interior_product(X, omega), L);
  return r;
}

GradedElement extended_bracket(const GradedElement& u, const GradedElement& v, const LieAlgebra4& L) {
  const auto ku = u.component().kind, kv = v.component().kind;
  if (ku == ComponentKind::MultiVector || kv == ComponentKind::MultiVector)
    throw Error(ErrorCode::MixedKinds, "extended bracket takes vector-part elements and forms");
  if (ku == ComponentKind::Vector && kv == ComponentKind::Vector)
    return GradedElement::from_vector(bracket(L, u.to_vector(), v.to_vector()), GradedComponent::vector_part());
  if (ku == ComponentKind::Vector) return lie_derivative(u.to_vector(), v, L);
  if (kv == ComponentKind::Vector) return -lie_derivative(v.to_vector(), u, L);
  return form_bracket(u, v, L);
}

}  // namespace superhom
