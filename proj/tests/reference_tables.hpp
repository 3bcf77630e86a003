#pragma once

// Reference Betti tables, transcribed cell by cell. Weights are signed here;
// the reference captions print |weight| for the cotangent and extended tables.

#include <cstddef>
#include <string>
#include <vector>

#include "superhom/complex.hpp"

namespace reference {

using superhom::ComplexKind;

struct Table {
  ComplexKind kind;
  int weight;
  int family;
  unsigned m0;  // first m column
  std::vector<std::size_t> spad;
  std::vector<std::size_t> kerd;
  std::vector<long> bett;
};

// A printed cell that rank-nullity with the table's own rows contradicts.
struct Erratum {
  ComplexKind kind;
  int weight;
  int family;  // 0 = every family of that table
  unsigned m;
  const char* row;  // "SpaD" or "KerD"
  std::size_t printed;
  std::size_t corrected;
};

inline const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> e = {
      {ComplexKind::Cotangent, -6, 5, 2, "KerD", 6, 38},
      {ComplexKind::Cotangent, -7, 0, 3, "SpaD", 76, 74},
  };
  return e;
}

inline std::vector<Table> tangent() {
  using V = std::vector<std::size_t>;
  using B = std::vector<long>;
  const V s0{1, 4, 6, 4, 1}, s1{6, 24, 36, 24, 6}, s2{4, 37, 108, 142, 88, 21};
  std::vector<Table> t;
  auto add = [&](int f, V k0, B b0, V k1, B b1, V k2, B b2) {
    t.push_back({ComplexKind::Tangent, 0, f, 0, s0, k0, b0});
    t.push_back({ComplexKind::Tangent, 1, f, 1, s1, k1, b1});
    t.push_back({ComplexKind::Tangent, 2, f, 1, s2, k2, b2});
  };
  add(1, {1, 4, 4, 1, 0}, {1, 2, 1, 0, 0}, {6, 19, 19, 6, 0}, {1, 2, 1, 0, 0}, {4, 33, 76, 68, 21, 0},
      {0, 1, 2, 1, 0, 0});
  for (int f : {2, 3, 4})
    add(f, {1, 4, 3, 1, 0}, {1, 1, 0, 0, 0}, {6, 18, 18, 6, 0}, {0, 0, 0, 0, 0}, {4, 33, 75, 67, 21, 0},
        {0, 0, 0, 0, 0, 0});
  add(5, {1, 4, 3, 1, 1}, {1, 1, 0, 1, 1}, {6, 18, 18, 6, 0}, {0, 0, 0, 0, 0}, {4, 33, 77, 67, 23, 1},
      {0, 2, 2, 2, 3, 1});
  add(6, {1, 4, 3, 1, 1}, {1, 1, 0, 1, 1}, {6, 18, 18, 6, 0}, {0, 0, 0, 0, 0}, {4, 33, 77, 67, 21, 2},
      {0, 2, 2, 0, 2, 2});
  return t;
}

inline std::vector<Table> cotangent() {
  using V = std::vector<std::size_t>;
  using B = std::vector<long>;
  const V s6{38, 32, 12, 4, 1}, s7{28, 76, 32, 12, 4, 1};
  std::vector<Table> t;
  auto add = [&](int f, V k6, B b6, V k7, B b7) {
    t.push_back({ComplexKind::Cotangent, -6, f, 2, s6, k6, b6});
    t.push_back({ComplexKind::Cotangent, -7, f, 2, s7, k7, b7});
  };
  add(1, {38, 12, 4, 2, 1}, {18, 4, 2, 2, 1}, {28, 50, 10, 4, 2, 1}, {4, 28, 2, 2, 2, 1});
  add(2, {38, 10, 3, 1, 1}, {16, 1, 0, 1, 1}, {28, 50, 9, 3, 1, 1}, {4, 27, 0, 0, 1, 1});
  add(3, {38, 12, 3, 1, 1}, {18, 3, 0, 1, 1}, {28, 52, 9, 3, 1, 1}, {6, 29, 0, 0, 1, 1});
  add(4, {38, 10, 3, 1, 1}, {16, 1, 0, 1, 1}, {28, 50, 9, 3, 1, 1}, {4, 27, 0, 0, 1, 1});
  add(5, {6, 13, 3, 1, 1}, {19, 4, 0, 1, 1}, {28, 53, 10, 3, 1, 1}, {7, 31, 1, 0, 1, 1});
  add(6, {38, 11, 3, 1, 1}, {17, 2, 0, 1, 1}, {28, 53, 10, 3, 1, 1}, {7, 31, 1, 0, 1, 1});
  return t;
}

inline std::vector<Table> extended() {
  using V = std::vector<std::size_t>;
  using B = std::vector<long>;
  const V s2{4, 17, 28, 22, 8, 1}, s3{6, 28, 53, 52, 28, 8, 1};
  std::vector<Table> t;
  auto add = [&](int f, V k2, B b2, V k3, B b3) {
    t.push_back({ComplexKind::Extended, -2, f, 1, s2, k2, b2});
    t.push_back({ComplexKind::Extended, -3, f, 1, s3, k3, b3});
  };
  add(1, {4, 13, 16, 10, 4, 1}, {0, 1, 4, 6, 4, 1}, {6, 26, 33, 28, 16, 6, 1}, {4, 6, 9, 16, 14, 6, 1});
  add(2, {4, 13, 17, 10, 4, 1}, {0, 2, 5, 6, 4, 1}, {6, 25, 28, 25, 13, 5, 1}, {3, 0, 1, 10, 10, 5, 1});
  add(3, {4, 13, 18, 10, 4, 1}, {0, 3, 6, 6, 4, 1}, {6, 25, 30, 25, 13, 5, 1}, {3, 2, 3, 10, 10, 5, 1});
  add(4, {4, 13, 17, 10, 4, 1}, {0, 2, 5, 6, 4, 1}, {6, 25, 29, 25, 13, 5, 1}, {3, 1, 2, 10, 10, 5, 1});
  add(5, {4, 13, 18, 10, 5, 1}, {0, 3, 6, 7, 5, 1}, {6, 25, 30, 25, 16, 5, 1}, {3, 2, 3, 13, 13, 5, 1});
  add(6, {4, 14, 16, 10, 5, 1}, {1, 2, 4, 7, 5, 1}, {6, 25, 29, 25, 16, 5, 1}, {3, 1, 2, 13, 13, 5, 1});
  return t;
}

// Applies the errata to a transcribed table.
inline Table corrected(Table t) {
  for (const auto& e : errata()) {
    if (e.kind != t.kind || e.weight != t.weight || (e.family != 0 && e.family != t.family)) continue;
    auto& row = std::string(e.row) == "SpaD" ? t.spad : t.kerd;
    row.at(e.m - t.m0) = e.corrected;
  }
  return t;
}

}  // namespace reference
