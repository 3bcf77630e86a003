#include "superhom/lie_algebra.hpp"

#include <set>

#include "superhom/error.hpp"

namespace superhom {

Vector4 Vector4::basis(int i) {
  if (i < 1 || i > 4) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  Vector4 v;
  v.c[i - 1] = Scalar(1);
  return v;
}

bool Vector4::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

Vector4& Vector4::operator+=(const Vector4& o) {
  for (int k = 0; k < 4; ++k) c[k] += o.c[k];
  return *this;
}

Vector4& Vector4::operator-=(const Vector4& o) {
  for (int k = 0; k < 4; ++k) c[k] -= o.c[k];
  return *this;
}

Vector4 operator*(const Scalar& s, const Vector4& v) {
  Vector4 r;
  for (int k = 0; k < 4; ++k) r.c[k] = s * v.c[k];
  return r;
}

std::string Vector4::to_string() const {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Scalar& x = c[k];
    if (x.is_zero()) continue;
    std::string y = "y" + std::to_string(k + 1);
    std::string s = x.to_string();
    bool compound = x.numerator().term_count() > 1 && x.is_polynomial();
    bool neg = !compound && s.front() == '-';
    if (neg) s.erase(0, 1);
    if (!out.empty()) {
      out += neg ? " - " : " + ";
    } else if (neg) {
      out += "-";
    }
    if (s == "1") {
      out += y;
    } else {
      out += (compound ? "(" + s + ")" : s) + " " + y;
    }
  }
  return out.empty() ? "0" : out;
}

int LieAlgebra4::slot(int i, int j) {
  static const int idx[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
  return idx[i - 1][j - 1];
}

void LieAlgebra4::set_bracket(int i, int j, const Vector4& v) {
  if (i < 1 || j > 4 || i >= j) throw Error(ErrorCode::InvalidArgument, "bracket indices must satisfy 1 <= i < j <= 4");
  table_[slot(i, j)] = v;
}

Vector4 LieAlgebra4::bracket_basis(int i, int j) const {
  if (i < 1 || i > 4 || j < 1 || j > 4) throw Error(ErrorCode::InvalidArgument, "bracket index out of range");
  if (i == j) return {};
  if (i < j) return table_[slot(i, j)];
  return Scalar(-1) * table_[slot(j, i)];
}

Scalar LieAlgebra4::c(int i, int j, int k) const { return bracket_basis(i, j).c[k - 1]; }

std::vector<std::string> LieAlgebra4::parameters() const {
  std::set<std::string> out;
  for (const auto& v : table_)
    for (const auto& x : v.c) {
      auto ps = x.parameters();
      out.insert(ps.begin(), ps.end());
    }
  return {out.begin(), out.end()};
}

LieAlgebra4 LieAlgebra4::substitute(const Assignment& at) const {
  LieAlgebra4 r;
  r.origin = origin;
  for (const auto& p : nonzero_) {
    ParamPolynomial s = p.substitute(at);
    if (s.is_zero())
      throw Error(ErrorCode::ConstraintViolation, "assignment zeroes nondegeneracy polynomial " + p.to_string());
    if (!s.is_constant()) r.nonzero_.push_back(s);
  }
  for (int t = 0; t < 6; ++t)
    for (int k = 0; k < 4; ++k) r.table_[t].c[k] = table_[t].c[k].substitute(at);
  for (const auto& [name, value] : at)
    if (r.origin.params.count(name) == 0) r.origin.params[name] = value.get_str();
  return r;
}

Vector4 bracket(const LieAlgebra4& L, const Vector4& x, const Vector4& y) {
  Vector4 r;
  for (int i = 1; i <= 4; ++i) {
    if (x.c[i - 1].is_zero()) continue;
    for (int j = 1; j <= 4; ++j) {
      if (i == j || y.c[j - 1].is_zero()) continue;
      Scalar s = x.c[i - 1] * y.c[j - 1];
      Vector4 b = L.bracket_basis(i, j);
      for (int k = 0; k < 4; ++k)
        if (!b.c[k].is_zero()) r.c[k] += s * b.c[k];
    }
  }
  return r;
}

std::vector<JacobiResidual> jacobi_residuals(const LieAlgebra4& L) {
  std::vector<JacobiResidual> out;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) {
        Vector4 yi = Vector4::basis(i), yj = Vector4::basis(j), yk = Vector4::basis(k);
        Vector4 s = bracket(L, bracket(L, yi, yj), yk) + bracket(L, bracket(L, yj, yk), yi) +
                    bracket(L, bracket(L, yk, yi), yj);
        for (int m = 1; m <= 4; ++m) out.push_back({i, j, k, m, s.c[m - 1]});
      }
  return out;
}

bool satisfies_jacobi(const LieAlgebra4& L) {
  for (const auto& r : jacobi_residuals(L))
    if (!r.value.is_zero()) return false;
  return true;
}

Matrix4 identity4() {
  Matrix4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = i == j ? 1 : 0;
  return g;
}

Matrix4 inverse4(const Matrix4& g) {
  Matrix4 a = g, inv = identity4();
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && a[p][c] == 0) ++p;
    if (p == 4) throw Error(ErrorCode::SingularMatrix, "basis change matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (int k = 0; k < 4; ++k) {
      a[c][k] *= s;
      inv[c][k] *= s;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 4; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

LieAlgebra4 change_basis(const LieAlgebra4& L, const Matrix4& g) {
  Matrix4 ginv = inverse4(g);
  std::array<Vector4, 4> e;
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i) e[a].c[i] = Scalar(g[i][a]);
  LieAlgebra4 r;
  r.origin = L.origin;
  for (const auto& p : L.nonzero()) r.add_nonzero(p);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      Vector4 v = bracket(L, e[a], e[b]);
      Vector4 w;
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          if (ginv[k][i] != 0 && !v.c[i].is_zero()) w.c[k] += Scalar(ginv[k][i]) * v.c[i];
      r.set_bracket(a + 1, b + 1, w);
    }
  return r;
}

}  // namespace superhom
