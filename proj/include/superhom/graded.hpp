#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "superhom/lie_algebra.hpp"

namespace superhom {

enum class ComponentKind { MultiVector, Form, Vector };

// One graded piece: Λ^a g (grade a-1), Λ^p g* (grade -(p+1)) or g itself
// (grade 0). Degrees past 4 are allowed and have dimension 0.
struct GradedComponent {
  ComponentKind kind = ComponentKind::Vector;
  int degree = 1;

  static GradedComponent multivector(int a);
  static GradedComponent form(int p);
  static GradedComponent vector_part() { return {ComponentKind::Vector, 1}; }

  int grade() const;
  // Superalgebra parity, grade mod 2.
  int parity() const { return grade() & 1; }
  std::size_t dimension() const;
  std::string name() const;

  auto operator<=>(const GradedComponent&) const = default;
};

// Canonical wedge basis of degree d as index bitmasks (bit i-1 for index i),
// ordered lexicographically by increasing index tuples.
const std::vector<unsigned>& wedge_basis(int degree);
std::size_t wedge_index(unsigned mask);
// Sign of e_A ∧ e_B relative to e_{A∪B}; 0 when A and B overlap.
int wedge_sign(unsigned a, unsigned b);

class GradedElement {
 public:
  explicit GradedElement(GradedComponent comp);
  static GradedElement basis(GradedComponent comp, std::size_t index);
  static GradedElement from_vector(const Vector4& v, GradedComponent comp = GradedComponent::multivector(1));
  // "y1^y2", "z1^z3", "1", or "y2" for the vector part.
  static std::string basis_label(GradedComponent comp, std::size_t index);

  const GradedComponent& component() const { return comp_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  Scalar& operator[](std::size_t i) { return coords_.at(i); }
  const Scalar& operator[](std::size_t i) const { return coords_.at(i); }
  bool is_zero() const;
  Vector4 to_vector() const;

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement operator-() const;
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const Scalar& s, GradedElement e);
  friend bool operator==(const GradedElement& a, const GradedElement& b);

  GradedElement substitute(const Assignment& at) const;
  std::string to_string() const;

 private:
  GradedComponent comp_;
  std::vector<Scalar> coords_;
};

// Both multivectors or both forms; throws MixedKinds.
GradedElement wedge(const GradedElement& u, const GradedElement& v);
GradedElement schouten_bracket(const GradedElement& P, const GradedElement& Q, const LieAlgebra4& L);
GradedElement ce_differential(const GradedElement& omega, const LieAlgebra4& L);
GradedElement form_bracket(const GradedElement& A, const GradedElement& B, const LieAlgebra4& L);
// Throws DegreeUnderflow on 0-forms.
GradedElement interior_product(const Vector4& X, const GradedElement& omega);
GradedElement lie_derivative(const Vector4& X, const GradedElement& omega, const LieAlgebra4& L);
// Vector part and forms only; throws MixedKinds otherwise.
GradedElement extended_bracket(const GradedElement& u, const GradedElement& v, const LieAlgebra4& L);

}  // namespace superhom
