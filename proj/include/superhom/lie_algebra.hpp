#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "superhom/polynomial.hpp"

namespace superhom {

using Scalar = ParamFraction;

struct Vector4 {
  std::array<Scalar, 4> c;

  static Vector4 basis(int i);  // y_i, 1-based
  bool is_zero() const;
  Vector4& operator+=(const Vector4& o);
  Vector4& operator-=(const Vector4& o);
  friend Vector4 operator+(Vector4 a, const Vector4& b) { return a += b; }
  friend Vector4 operator-(Vector4 a, const Vector4& b) { return a -= b; }
  friend Vector4 operator*(const Scalar& s, const Vector4& v);
  friend bool operator==(const Vector4& a, const Vector4& b) { return a.c == b.c; }
  // "C143 y3 + C144 y4"; zero prints as "0".
  std::string to_string() const;
};

// Where an algebra came from; echoed in reports.
struct AlgebraOrigin {
  std::string source = "inline";  // family | classType | ansatz | inline
  int id = 0;
  std::map<std::string, std::string> params;
};

class LieAlgebra4 {
 public:
  LieAlgebra4() = default;

  // [y_i, y_j] = v for 1 <= i < j <= 4.
  void set_bracket(int i, int j, const Vector4& v);
  // [y_i, y_j] for any i, j (antisymmetry applied).
  Vector4 bracket_basis(int i, int j) const;
  // c_{ijk}, 1-based.
  Scalar c(int i, int j, int k) const;

  std::vector<std::string> parameters() const;
  const std::vector<ParamPolynomial>& nonzero() const { return nonzero_; }
  void add_nonzero(const ParamPolynomial& p) { nonzero_.push_back(p); }
  bool is_specialized() const { return parameters().empty(); }

  // Substitutes parameter values; throws ConstraintViolation when a
  // nondegeneracy polynomial vanishes.
  LieAlgebra4 substitute(const Assignment& at) const;

  AlgebraOrigin origin;

  friend bool operator==(const LieAlgebra4& a, const LieAlgebra4& b) { return a.table_ == b.table_; }

 private:
  static int slot(int i, int j);
  std::array<Vector4, 6> table_{};  // (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
  std::vector<ParamPolynomial> nonzero_;
};

Vector4 bracket(const LieAlgebra4& L, const Vector4& x, const Vector4& y);

struct JacobiResidual {
  int i, j, k;  // triple, i < j < k
  int m;        // output coordinate
  Scalar value;
};

// Coefficient on y_m of [[y_i,y_j],y_k] + [[y_j,y_k],y_i] + [[y_k,y_i],y_j],
// for every triple and m: 16 entries.
std::vector<JacobiResidual> jacobi_residuals(const LieAlgebra4& L);
bool satisfies_jacobi(const LieAlgebra4& L);

using Matrix4 = std::array<std::array<Rational, 4>, 4>;

Matrix4 identity4();
// Throws SingularMatrix.
Matrix4 inverse4(const Matrix4& g);
// New basis e_a = sum_i g[i][a] y_i; structure constants re-expressed in it.
LieAlgebra4 change_basis(const LieAlgebra4& L, const Matrix4& g);

}  // namespace superhom
