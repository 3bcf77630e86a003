#include "superhom/complex.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>

#include "superhom/error.hpp"

namespace superhom {

std::string kind_name(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Tangent: return "tangent";
    case ComplexKind::Cotangent: return "cotangent";
    case ComplexKind::Extended: return "extended";
  }
  return "";
}

ComplexKind parse_kind(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "tangent") return ComplexKind::Tangent;
  if (t == "cotangent") return ComplexKind::Cotangent;
  if (t == "extended") return ComplexKind::Extended;
  throw Error(ErrorCode::InvalidArgument, "unknown complex kind '" + text + "'");
}

std::vector<GradedComponent> components(ComplexKind kind) {
  std::vector<GradedComponent> out;
  if (kind == ComplexKind::Tangent) {
    for (int a = 1; a <= 4; ++a) out.push_back(GradedComponent::multivector(a));
    return out;
  }
  if (kind == ComplexKind::Extended) out.push_back(GradedComponent::vector_part());
  for (int p = 0; p <= 4; ++p) out.push_back(GradedComponent::form(p));
  return out;
}

const std::vector<Letter>& letters(ComplexKind kind) {
  static const std::array<std::vector<Letter>, 3> table = [] {
    std::array<std::vector<Letter>, 3> t;
    for (auto k : {ComplexKind::Tangent, ComplexKind::Cotangent, ComplexKind::Extended})
      for (const auto& c : components(k))
        for (std::size_t i = 0; i < c.dimension(); ++i) t[static_cast<int>(k)].push_back({c, i});
    return t;
  }();
  return table[static_cast<int>(kind)];
}

std::string WeightSignature::to_string() const {
  std::string out = "{";
  for (const auto& [c, n] : occupancy) {
    if (out.size() > 1) out += ", ";
    out += c.name() + ":" + std::to_string(n);
  }
  return out + "}";
}

namespace {

bool antisymmetric(const GradedComponent& c) { return ((c.grade() + 1) & 1) == 1; }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<WeightSignature> enumerate_signatures(ComplexKind kind, int weight, unsigned m) {
  const auto comps = components(kind);
  std::vector<WeightSignature> out;
  std::vector<unsigned> counts(comps.size(), 0);
  std::function<void(std::size_t, unsigned, int)> rec = [&](std::size_t ci, unsigned left, int wleft) {
    if (ci == comps.size()) {
      if (left != 0 || wleft != 0) return;
      WeightSignature s;
      s.m = m;
      s.weight = weight;
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (counts[i] > 0) s.occupancy.emplace_back(comps[i], counts[i]);
      out.push_back(std::move(s));
      return;
    }
    const auto& c = comps[ci];
    unsigned cap = antisymmetric(c) ? std::min<unsigned>(left, static_cast<unsigned>(c.dimension())) : left;
    for (unsigned n = 0; n <= cap; ++n) {
      counts[ci] = n;
      rec(ci + 1, left - n, wleft - static_cast<int>(n) * c.grade());
    }
    counts[ci] = 0;
  };
  rec(0, m, weight);
  return out;
}

std::size_t signature_dimension(const WeightSignature& sig) {
  std::size_t d = 1;
  for (const auto& [c, n] : sig.occupancy)
    d *= antisymmetric(c) ? binomial(c.dimension(), n) : binomial(c.dimension() + n - 1, n);
  return d;
}

std::pair<unsigned, unsigned> chain_range(ComplexKind kind, int weight) {
  const unsigned lo = (kind == ComplexKind::Tangent && weight == 0) ? 0 : 1;
  const unsigned mag = static_cast<unsigned>(weight < 0 ? -weight : weight);
  switch (kind) {
    case ComplexKind::Tangent:
      if (weight < 0) return {1, 0};
      return {lo, mag + 4};
    case ComplexKind::Cotangent:
      if (weight >= 0) return {1, 0};
      return {lo, mag};
    case ComplexKind::Extended:
      if (weight > 0) return {1, 0};
      return {lo, mag + 4};
  }
  return {1, 0};
}

std::string WeightedChainBasis::word_label(std::size_t i) const {
  const auto& alpha = letters(kind);
  std::string out;
  for (auto l : words.at(i)) {
    if (!out.empty()) out += " & ";
    out += alpha[l].label();
  }
  return out.empty() ? "1" : out;
}

WeightedChainBasis chain_basis(ComplexKind kind, int weight, unsigned m) {
  WeightedChainBasis b;
  b.kind = kind;
  b.weight = weight;
  b.m = m;
  b.signatures = enumerate_signatures(kind, weight, m);
  const auto& alpha = letters(kind);
  std::map<GradedComponent, std::size_t> first;
  for (std::size_t i = alpha.size(); i-- > 0;) first[alpha[i].component] = i;

  for (const auto& sig : b.signatures) {
    // Per component: all index choices (strict or with repetition).
    std::vector<std::vector<Word>> parts;
    for (const auto& [c, n] : sig.occupancy) {
      std::vector<Word> choices;
      Word cur;
      const bool strict = antisymmetric(c);
      const std::size_t base = first.at(c), dim = c.dimension();
      std::function<void(std::size_t)> pick = [&](std::size_t from) {
        if (cur.size() == n) {
          choices.push_back(cur);
          return;
        }
        for (std::size_t i = from; i < dim; ++i) {
          cur.push_back(base + i);
          pick(strict ? i + 1 : i);
          cur.pop_back();
        }
      };
      pick(0);
      parts.push_back(std::move(choices));
    }
    Word w;
    std::function<void(std::size_t)> combine = [&](std::size_t pi) {
      if (pi == parts.size()) {
        b.position.emplace(w, b.words.size());
        b.words.push_back(w);
        return;
      }
      for (const auto& choice : parts[pi]) {
        w.insert(w.end(), choice.begin(), choice.end());
        combine(pi + 1);
        w.resize(w.size() - choice.size());
      }
    };
    combine(0);
  }
  return b;
}

namespace {

using LetterCombination = std::vector<std::pair<std::size_t, Scalar>>;

// Brackets of alphabet letters, computed on demand.
class LetterBrackets {
 public:
  LetterBrackets(ComplexKind kind, const LieAlgebra4& L)
      : kind_(kind), L_(L), alpha_(letters(kind)), cache_(alpha_.size() * alpha_.size()), done_(cache_.size(), false) {
    for (std::size_t i = 0; i < alpha_.size(); ++i) index_[{alpha_[i].component, alpha_[i].index}] = i;
  }

  const LetterCombination& operator()(std::size_t x, std::size_t y) {
    std::size_t slot = x * alpha_.size() + y;
    if (!done_[slot]) {
      cache_[slot] = compute(x, y);
      done_[slot] = true;
    }
    return cache_[slot];
  }

 private:
  LetterCombination compute(std::size_t x, std::size_t y) const {
    const Letter& a = alpha_[x];
    const Letter& b = alpha_[y];
    GradedElement u = GradedElement::basis(a.component, a.index);
    GradedElement v = GradedElement::basis(b.component, b.index);
    GradedElement r = kind_ == ComplexKind::Tangent     ? schouten_bracket(u, v, L_)
                      : kind_ == ComplexKind::Cotangent ? form_bracket(u, v, L_)
                                                        : extended_bracket(u, v, L_);
    LetterCombination out;
    for (std::size_t i = 0; i < r.coords().size(); ++i) {
      if (r[i].is_zero()) continue;
      auto it = index_.find({r.component(), i});
      if (it == index_.end() || r.component().grade() != a.grade() + b.grade())
        throw Error(ErrorCode::InvalidArgument, "bracket left the graded alphabet");
      out.emplace_back(it->second, r[i]);
    }
    return out;
  }

  ComplexKind kind_;
  const LieAlgebra4& L_;
  const std::vector<Letter>& alpha_;
  std::map<std::pair<GradedComponent, std::size_t>, std::size_t> index_;
  std::vector<LetterCombination> cache_;
  std::vector<bool> done_;
};

}  // namespace

PolyMatrix boundary_matrix(ComplexKind kind, int weight, unsigned m, const LieAlgebra4& L) {
  const WeightedChainBasis src = chain_basis(kind, weight, m);
  const WeightedChainBasis dst = m == 0 ? WeightedChainBasis{} : chain_basis(kind, weight, m - 1);
  const auto& alpha = letters(kind);
  LetterBrackets brackets(kind, L);

  std::map<PolyMatrix::Index, Scalar> acc;
  Word rest, target;
  for (std::size_t col = 0; col < src.words.size(); ++col) {
    const Word& w = src.words[col];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto& br = brackets(w[i], w[j]);
        if (br.empty()) continue;
        // Koszul sign of moving x_i then x_j to the front, times (-1)^grade(x_i).
        int s = 0;
        for (std::size_t k = 0; k < i; ++k) s += alpha[w[k]].wedge_parity() * alpha[w[i]].wedge_parity();
        for (std::size_t k = 0; k < j; ++k)
          if (k != i) s += alpha[w[k]].wedge_parity() * alpha[w[j]].wedge_parity();
        s += alpha[w[i]].grade() & 1;
        rest.clear();
        for (std::size_t k = 0; k < m; ++k)
          if (k != i && k != j) rest.push_back(w[k]);
        for (const auto& [l, coef] : br) {
          // Insert l into the sorted rest, collecting swap signs.
          const int pl = alpha[l].wedge_parity();
          int t = s;
          bool vanish = false;
          target.clear();
          std::size_t k = 0;
          for (; k < rest.size() && rest[k] < l; ++k) t += pl * alpha[rest[k]].wedge_parity();
          if (k < rest.size() && rest[k] == l && pl == 1) vanish = true;
          if (vanish) continue;
          target.assign(rest.begin(), rest.begin() + static_cast<long>(k));
          target.push_back(l);
          target.insert(target.end(), rest.begin() + static_cast<long>(k), rest.end());
          auto row = dst.position.find(target);
          if (row == dst.position.end()) throw Error(ErrorCode::InvalidArgument, "boundary left the weight space");
          auto [it, inserted] = acc.emplace(PolyMatrix::Index{row->second, col}, (t & 1) ? -coef : coef);
          if (!inserted) it->second += (t & 1) ? -coef : coef;
        }
      }
  }

  Monomial common;
  for (const auto& [ij, v] : acc) common = Monomial::lcm(common, v.denominator());
  PolyMatrix M(dst.dimension(), src.dimension());
  for (const auto& [ij, v] : acc)
    if (!v.is_zero()) M.set(ij.first, ij.second, v.numerator().times_monomial(common / v.denominator()));
  M.set_nonzero(L.nonzero());
  return M;
}

long BettiReport::betti_euler() const {
  long e = 0;
  for (const auto& r : rows) e += (r.m & 1) ? -r.betti : r.betti;
  return e;
}

BettiReport homology_report(ComplexKind kind, int weight, const LieAlgebra4& L, const RankMode& mode) {
  BettiReport rep;
  rep.kind = kind;
  rep.algebra = L.origin;
  rep.weight = weight;
  rep.mode = mode;
  if (const auto* sp = std::get_if<Specialized>(&mode)) rep.specialization = sp->assignment;

  const auto [lo, hi] = chain_range(kind, weight);
  std::map<unsigned, std::size_t> dims, ranks;
  for (unsigned m = lo; m <= hi && lo <= hi; ++m) {
    std::size_t d = chain_basis(kind, weight, m).dimension();
    if (d > 0) dims[m] = d;
  }
  for (const auto& [m, d] : dims) {
    ranks[m] = 0;
    if (m > lo && dims.count(m - 1)) ranks[m] = matrix_rank(boundary_matrix(kind, weight, m, L), mode).rank;
  }
  for (const auto& [m, d] : dims) {
    BettiRow row;
    row.m = m;
    row.dim = d;
    row.ker = d - ranks[m];
    std::size_t next = ranks.count(m + 1) ? ranks[m + 1] : 0;
    row.betti = static_cast<long>(row.ker) - static_cast<long>(next);
    rep.rows.push_back(row);
    rep.euler += (m & 1) ? -static_cast<long>(d) : static_cast<long>(d);
  }
  return rep;
}

RankResult strata_report(ComplexKind kind, int weight, unsigned m, const LieAlgebra4& L, const Assignment& at) {
  for (const auto& p : L.parameters())
    if (!at.count(p)) throw Error(ErrorCode::MissingParameter, "no value for parameter " + p);
  return matrix_rank(boundary_matrix(kind, weight, m, L), Specialized{at});
}

}  // namespace superhom
