#include "superhom/poly_matrix.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>

#include "superhom/error.hpp"

namespace superhom {

void PolyMatrix::set(std::size_t r, std::size_t c, ParamPolynomial v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::InvalidArgument, "matrix index out of bounds");
  if (v.is_zero()) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = std::move(v);
  }
}

void PolyMatrix::add(std::size_t r, std::size_t c, const ParamPolynomial& v) {
  if (v.is_zero()) return;
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::InvalidArgument, "matrix index out of bounds");
  auto [it, inserted] = entries_.emplace(Index{r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

ParamPolynomial PolyMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? ParamPolynomial() : it->second;
}

std::set<std::string> PolyMatrix::parameters() const {
  std::set<std::string> out;
  for (const auto& [ij, p] : entries_) {
    auto ps = p.parameters();
    out.insert(ps.begin(), ps.end());
  }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (const auto& [ij, p] : entries_) t.entries_.emplace(Index{ij.second, ij.first}, p);
  t.nonzero_ = nonzero_;
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  std::vector<std::vector<std::pair<std::size_t, const ParamPolynomial*>>> orow(o.rows_);
  for (const auto& [ij, p] : o.entries_) orow[ij.first].emplace_back(ij.second, &p);
  PolyMatrix r(rows_, o.cols_);
  for (const auto& [ij, p] : entries_)
    for (const auto& [c, q] : orow[ij.second]) r.add(ij.first, c, p * *q);
  r.nonzero_ = nonzero_;
  return r;
}

std::string mode_name(const RankMode& mode) {
  if (std::holds_alternative<SymbolicGeneric>(mode)) return "SymbolicGeneric";
  if (std::holds_alternative<Randomized>(mode)) return "Randomized";
  return "Specialized";
}

// ------------------------------------------------------------ rational rank

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

// Scales a rational row to a primitive integer row.
SparseRow integer_row(const RationalVector& row) {
  Integer l = 1;
  for (const auto& v : row)
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow out;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) out.emplace_back(c, Integer(row[c].get_num() * (l / row[c].get_den())));
  return out;
}

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- piv_lead * row - row_lead * pivot, cancelling the pivot column.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot, const Integer& row_lead) {
  const Integer& piv_lead = pivot.front().second;
  Integer g = gcd(piv_lead, row_lead);
  Integer a = piv_lead / g, b = row_lead / g;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin(), j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      out.emplace_back(i->first, Integer(a * i->second));
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, Integer(-b * j->second));
      ++j;
    } else {
      Integer v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

std::size_t rational_rank(const RationalMatrix& a) {
  std::vector<SparseRow> rows;
  rows.reserve(a.size());
  for (const auto& r : a) {
    SparseRow s = integer_row(r);
    if (!s.empty()) rows.push_back(std::move(s));
  }
  // Short rows first keeps fill-in low.
  std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& x, const SparseRow& y) { return x.size() < y.size(); });
  std::map<std::size_t, SparseRow> pivots;  // leading column -> row
  for (auto& row : rows) {
    make_primitive(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::size_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = eliminate(row, it->second, row.front().second);
    }
  }
  return pivots.size();
}

std::vector<RationalVector> rational_kernel(const RationalMatrix& a, std::size_t cols) {
  RationalMatrix m = a;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<RationalVector> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix specialize(const PolyMatrix& m, const Assignment& at) {
  PointEvaluator ev(at);
  for (const auto& p : m.nonzero())
    if (ev(p) == 0)
      throw Error(ErrorCode::ConstraintViolation, "specialization zeroes nondegeneracy polynomial " + p.to_string());
  RationalMatrix out(m.rows(), RationalVector(m.cols(), Rational(0)));
  for (const auto& [ij, p] : m.entries()) out[ij.first][ij.second] = ev(p);
  return out;
}

// ------------------------------------------------------------ symbolic rank

std::size_t symbolic_rank(const PolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<ParamPolynomial>> a(rows, std::vector<ParamPolynomial>(cols));
  for (const auto& [ij, p] : m.entries()) a[ij.first][ij.second] = p;
  std::vector<std::size_t> row_of(rows), col_of(cols);
  for (std::size_t i = 0; i < rows; ++i) row_of[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_of[j] = j;

  ParamPolynomial prev(1);
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    // Pivot: lowest total degree, then fewest terms, then Markowitz count.
    std::vector<std::size_t> row_nnz(rows, 0), col_nnz(cols, 0);
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (!a[row_of[i]][col_of[j]].is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }
    std::size_t bi = rows, bj = cols;
    std::tuple<unsigned, std::size_t, std::size_t> best{std::numeric_limits<unsigned>::max(), 0, 0};
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const auto& e = a[row_of[i]][col_of[j]];
        if (e.is_zero()) continue;
        std::tuple<unsigned, std::size_t, std::size_t> key{e.total_degree(), e.term_count(),
                                                           (row_nnz[i] - 1) * (col_nnz[j] - 1)};
        if (bi == rows || key < best) {
          best = key;
          bi = i;
          bj = j;
        }
      }
    if (bi == rows) break;
    std::swap(row_of[k], row_of[bi]);
    std::swap(col_of[k], col_of[bj]);
    const ParamPolynomial piv = a[row_of[k]][col_of[k]];
    for (std::size_t i = k + 1; i < rows; ++i) {
      auto& ri = a[row_of[i]];
      const ParamPolynomial lead = ri[col_of[k]];
      for (std::size_t j = k + 1; j < cols; ++j) {
        auto& e = ri[col_of[j]];
        const auto& pk = a[row_of[k]][col_of[j]];
        ParamPolynomial v = piv * e;
        if (!lead.is_zero() && !pk.is_zero()) v -= lead * pk;
        e = v.is_zero() ? ParamPolynomial() : v.exact_divide(prev);
      }
      ri[col_of[k]] = ParamPolynomial();
    }
    prev = piv;
  }
  return k;
}

// ----------------------------------------------------------- matrix_rank

namespace {

Assignment random_point(const std::vector<std::string>& names, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  Assignment at;
  for (const auto& n : names) at[n] = Rational(dist(rng));
  return at;
}

}  // namespace

RankResult matrix_rank(const PolyMatrix& m, const RankMode& mode) {
  std::size_t rank = 0;
  if (std::holds_alternative<SymbolicGeneric>(mode)) {
    rank = symbolic_rank(m);
  } else if (const auto* sp = std::get_if<Specialized>(&mode)) {
    rank = rational_rank(specialize(m, sp->assignment));
  } else {
    const auto& rz = std::get<Randomized>(mode);
    if (rz.trials < 1) throw Error(ErrorCode::InvalidArgument, "Randomized mode needs at least one trial");
    if (rz.range < 1) throw Error(ErrorCode::InvalidArgument, "Randomized coefficient range must be positive");
    auto params = m.parameters();
    for (const auto& p : m.nonzero()) {
      auto ps = p.parameters();
      params.insert(ps.begin(), ps.end());
    }
    std::vector<std::string> names(params.begin(), params.end());
    std::mt19937_64 rng(rz.seed);
    const std::size_t full = std::min(m.rows(), m.cols());
    for (unsigned t = 0; t < rz.trials && rank < full; ++t) {
      Assignment at;
      for (int attempt = 0;; ++attempt) {
        if (attempt == 1000)
          throw Error(ErrorCode::ConstraintViolation, "could not draw a point off the nondegeneracy locus");
        at = random_point(names, rng, rz.range);
        bool ok = true;
        PointEvaluator ev(at);
        for (const auto& p : m.nonzero())
          if (ev(p) == 0) ok = false;
        if (ok) break;
      }
      rank = std::max(rank, rational_rank(specialize(m, at)));
    }
  }
  return {rank, m.cols() - rank};
}

std::vector<RationalVector> kernel_basis(const PolyMatrix& m, const Specialized& mode) {
  return rational_kernel(specialize(m, mode.assignment), m.cols());
}

}  // namespace superhom
