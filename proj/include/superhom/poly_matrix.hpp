#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "superhom/polynomial.hpp"

namespace superhom {

class PolyMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Index, ParamPolynomial>& entries() const { return entries_; }

  // Stores v at (r, c); a zero v erases the entry.
  void set(std::size_t r, std::size_t c, ParamPolynomial v);
  void add(std::size_t r, std::size_t c, const ParamPolynomial& v);
  ParamPolynomial get(std::size_t r, std::size_t c) const;

  // Polynomials assumed nonzero (nondegeneracy locus of the source algebra).
  const std::vector<ParamPolynomial>& nonzero() const { return nonzero_; }
  void set_nonzero(std::vector<ParamPolynomial> polys) { nonzero_ = std::move(polys); }

  std::set<std::string> parameters() const;
  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  bool is_zero() const { return entries_.empty(); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::map<Index, ParamPolynomial> entries_;
  std::vector<ParamPolynomial> nonzero_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct SymbolicGeneric {};
struct Randomized {
  std::uint64_t seed = kDefaultSeed;
  unsigned trials = 3;
  long range = 10000;
};
struct Specialized {
  Assignment assignment;
};
using RankMode = std::variant<SymbolicGeneric, Randomized, Specialized>;

std::string mode_name(const RankMode& mode);

struct RankResult {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  bool operator==(const RankResult&) const = default;
};

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RankResult matrix_rank(const PolyMatrix& m, const RankMode& mode);
std::vector<RationalVector> kernel_basis(const PolyMatrix& m, const Specialized& mode);

// Exact rank over Q of a rational matrix (fraction-free row elimination).
std::size_t rational_rank(const RationalMatrix& a);
// Kernel basis over Q from the reduced row echelon form.
std::vector<RationalVector> rational_kernel(const RationalMatrix& a, std::size_t cols);
// Evaluates every entry; throws ConstraintViolation when a nondegeneracy
// polynomial vanishes at the point and MissingParameter on gaps.
RationalMatrix specialize(const PolyMatrix& m, const Assignment& at);
// Rank over the field of rational functions in the parameters (Bareiss).
std::size_t symbolic_rank(const PolyMatrix& m);

}  // namespace superhom
