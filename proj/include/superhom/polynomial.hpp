#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superhom/rational.hpp"

namespace superhom {

// Interned parameter name. Ordering is by name, so every alphabet is sorted
// the same way regardless of interning order.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *name_; }
  bool operator==(const Symbol& o) const { return name_ == o.name_; }
  bool operator<(const Symbol& o) const { return name_ != o.name_ && *name_ < *o.name_; }
  std::size_t hash() const { return std::hash<const void*>()(name_); }

 private:
  const std::string* name_ = nullptr;
};

class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  static Monomial variable(Symbol s, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(Symbol s) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;  // sorted by symbol name, exponents > 0
  unsigned degree_ = 0;
};

// Graded lexicographic order; the alphabet is sorted by name and the first
// variable carries the highest lex weight.
bool grlex_less(const Monomial& a, const Monomial& b);
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

using Assignment = std::map<std::string, Rational>;

class ParamPolynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  ParamPolynomial() = default;
  ParamPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPolynomial(long c) : ParamPolynomial(Rational(c)) {}  // NOLINT
  static ParamPolynomial variable(std::string_view name);
  static ParamPolynomial term(const Monomial& m, const Rational& c);
  // Polynomial expressions in + - * ^ and parentheses; division only by
  // nonzero rational constants.
  static ParamPolynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  unsigned total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  // Highest term in grlex order. Requires !is_zero().
  const Terms::value_type& leading_term() const { return *terms_.rbegin(); }
  std::set<std::string> parameters() const;

  void add_term(const Monomial& m, const Rational& c);

  ParamPolynomial& operator+=(const ParamPolynomial& o);
  ParamPolynomial& operator-=(const ParamPolynomial& o);
  ParamPolynomial& operator*=(const ParamPolynomial& o);
  ParamPolynomial& operator*=(const Rational& c);
  ParamPolynomial operator-() const;
  friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
  friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
  friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) { return a.terms_ == b.terms_; }

  ParamPolynomial pow(unsigned e) const;
  ParamPolynomial times_monomial(const Monomial& m) const;
  // Exact quotient; throws InvalidArgument when divisor does not divide.
  ParamPolynomial exact_divide(const ParamPolynomial& divisor) const;
  // Largest monomial dividing every term.
  Monomial monomial_content() const;

  Rational eval(const Assignment& at) const;
  // Partial evaluation: assigned parameters are replaced, others kept.
  ParamPolynomial substitute(const Assignment& at) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

// Formal fraction num / den with a monomial denominator (powers of
// assumed-nonzero parameters). Kept reduced: no variable of den divides
// every term of num.
class ParamFraction {
 public:
  ParamFraction() = default;
  ParamFraction(ParamPolynomial num, Monomial den = {});  // NOLINT
  ParamFraction(const Rational& c) : num_(c) {}           // NOLINT
  ParamFraction(long c) : num_(c) {}                      // NOLINT
  static ParamFraction variable(std::string_view name) { return ParamPolynomial::variable(name); }
  // Like ParamPolynomial::parse, additionally allowing division by a single
  // term (e.g. "C244/C144", "(C143*C144 - 2)/(8*C144^2)").
  static ParamFraction parse(std::string_view text);

  const ParamPolynomial& numerator() const { return num_; }
  const Monomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::set<std::string> parameters() const;

  ParamFraction& operator+=(const ParamFraction& o);
  ParamFraction& operator-=(const ParamFraction& o);
  ParamFraction& operator*=(const ParamFraction& o);
  ParamFraction operator-() const { return ParamFraction(-num_, den_); }
  friend ParamFraction operator+(ParamFraction a, const ParamFraction& b) { return a += b; }
  friend ParamFraction operator-(ParamFraction a, const ParamFraction& b) { return a -= b; }
  friend ParamFraction operator*(ParamFraction a, const ParamFraction& b) { return a *= b; }
  friend bool operator==(const ParamFraction& a, const ParamFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Divides by c * m; c must be nonzero.
  ParamFraction divided_by_term(const Rational& c, const Monomial& m) const;

  // Throws DivisionByZero when the denominator vanishes at the point.
  Rational eval(const Assignment& at) const;
  ParamFraction substitute(const Assignment& at) const;

  std::string to_string() const;

 private:
  void normalize();
  ParamPolynomial num_;
  Monomial den_;
};

// Evaluates many polynomials at one point, caching parameter powers.
class PointEvaluator {
 public:
  explicit PointEvaluator(const Assignment& at);
  Rational operator()(const ParamPolynomial& p);
  Rational operator()(const ParamFraction& f);

 private:
  const Rational& power(Symbol s, unsigned e);
  struct SymbolHash {
    std::size_t operator()(const Symbol& s) const { return s.hash(); }
  };
  const Assignment& at_;
  std::unordered_map<Symbol, std::vector<Rational>, SymbolHash> powers_;
};

}  // namespace superhom
