#include "superhom/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "superhom/error.hpp"

namespace superhom {

// ---------------------------------------------------------------- Symbol

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::unordered_set<std::string>* table = new std::unordered_set<std::string>();
  std::lock_guard<std::mutex> lock(mutex);
  return &*table->emplace(name).first;
}

}  // namespace

Symbol::Symbol(std::string_view name) : name_(intern(name)) {}

// -------------------------------------------------------------- Monomial

Monomial Monomial::variable(Symbol s, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(s, exponent);
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::exponent(Symbol s) const {
  for (const auto& [sym, e] : factors_)
    if (sym == s) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto i = factors_.begin(), j = o.factors_.begin();
  while (i != factors_.end() || j != o.factors_.end()) {
    if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto j = o.factors_.begin();
  for (const auto& [s, e] : factors_) {
    while (j != o.factors_.end() && j->first < s) ++j;
    if (j == o.factors_.end() || !(j->first == s) || j->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  auto j = divisor.factors_.begin();
  for (const auto& [s, e] : factors_) {
    unsigned d = 0;
    if (j != divisor.factors_.end() && j->first == s) d = (j++)->second;
    if (e > d) r.factors_.emplace_back(s, e - d);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto j = b.factors_.begin();
  for (const auto& [s, e] : a.factors_) {
    while (j != b.factors_.end() && j->first < s) ++j;
    if (j != b.factors_.end() && j->first == s) {
      unsigned m = std::min(e, j->second);
      r.factors_.emplace_back(s, m);
      r.degree_ += m;
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) { return (a * b) / gcd(a, b); }

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [s, e] : factors_) {
    if (!out.empty()) out += '*';
    out += s.name();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin(), j = fb.begin();
  while (i != fa.end() && j != fb.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second < j->second;
      ++i;
      ++j;
    } else {
      // The earlier variable is present only in one of them.
      return j->first < i->first;
    }
  }
  return i == fa.end() && j != fb.end();
}

// -------------------------------------------------------- ParamPolynomial

ParamPolynomial::ParamPolynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

ParamPolynomial ParamPolynomial::variable(std::string_view name) {
  return term(Monomial::variable(Symbol(name)), Rational(1));
}

ParamPolynomial ParamPolynomial::term(const Monomial& m, const Rational& c) {
  ParamPolynomial p;
  p.add_term(m, c);
  return p;
}

bool ParamPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational ParamPolynomial::constant_value() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ParamPolynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::set<std::string> ParamPolynomial::parameters() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m.factors()) out.insert(s.name());
  return out;
}

void ParamPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
  ParamPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, Rational(ca * cb));
  return r;
}

ParamPolynomial& ParamPolynomial::operator*=(const ParamPolynomial& o) { return *this = *this * o; }

ParamPolynomial& ParamPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

ParamPolynomial ParamPolynomial::pow(unsigned e) const {
  ParamPolynomial result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ParamPolynomial ParamPolynomial::times_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  ParamPolynomial r;
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
  return r;
}

ParamPolynomial ParamPolynomial::exact_divide(const ParamPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& [lm, lc] = divisor.leading_term();
  ParamPolynomial rem = *this, quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm))
      throw Error(ErrorCode::InvalidArgument, "inexact division of " + to_string() + " by " + divisor.to_string());
    ParamPolynomial t = term(rm / lm, Rational(rc / lc));
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Monomial ParamPolynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, m);
  }
  return g;
}

Rational ParamPolynomial::eval(const Assignment& at) const {
  PointEvaluator ev(at);
  return ev(*this);
}

ParamPolynomial ParamPolynomial::substitute(const Assignment& at) const {
  ParamPolynomial r;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    Monomial rest;
    for (const auto& [s, e] : m.factors()) {
      auto it = at.find(s.name());
      if (it == at.end()) {
        rest = rest * Monomial::variable(s, e);
      } else {
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
        mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
        coef *= p;
      }
    }
    r.add_term(rest, coef);
  }
  return r;
}

std::string ParamPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------- ParamFraction

ParamFraction::ParamFraction(ParamPolynomial num, Monomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void ParamFraction::normalize() {
  if (num_.is_zero()) {
    den_ = Monomial();
    return;
  }
  if (den_.is_one()) return;
  Monomial g = Monomial::gcd(num_.monomial_content(), den_);
  if (g.is_one()) return;
  ParamPolynomial reduced;
  for (const auto& [m, c] : num_.terms()) reduced.add_term(m / g, c);
  num_ = std::move(reduced);
  den_ = den_ / g;
}

std::set<std::string> ParamFraction::parameters() const {
  auto out = num_.parameters();
  for (const auto& [s, e] : den_.factors()) out.insert(s.name());
  return out;
}

ParamFraction& ParamFraction::operator+=(const ParamFraction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    Monomial l = Monomial::lcm(den_, o.den_);
    num_ = num_.times_monomial(l / den_) + o.num_.times_monomial(l / o.den_);
    den_ = l;
  }
  normalize();
  return *this;
}

ParamFraction& ParamFraction::operator-=(const ParamFraction& o) { return *this += -o; }

ParamFraction& ParamFraction::operator*=(const ParamFraction& o) {
  num_ *= o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ParamFraction ParamFraction::divided_by_term(const Rational& c, const Monomial& m) const {
  if (c == 0) throw Error(ErrorCode::DivisionByZero, "division by zero term");
  ParamPolynomial n = num_;
  n *= Rational(1 / c);
  return ParamFraction(std::move(n), den_ * m);
}

Rational ParamFraction::eval(const Assignment& at) const {
  PointEvaluator ev(at);
  return ev(*this);
}

ParamFraction ParamFraction::substitute(const Assignment& at) const {
  ParamPolynomial n = num_.substitute(at);
  ParamPolynomial d = ParamPolynomial::term(den_, Rational(1)).substitute(at);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator " + den_.to_string() + " vanishes");
  const auto& [dm, dc] = d.leading_term();
  return ParamFraction(n, {}).divided_by_term(dc, dm);
}

std::string ParamFraction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.factors().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

// --------------------------------------------------------- PointEvaluator

PointEvaluator::PointEvaluator(const Assignment& at) : at_(at) {}

const Rational& PointEvaluator::power(Symbol s, unsigned e) {
  auto it = powers_.find(s);
  if (it == powers_.end()) {
    auto a = at_.find(s.name());
    if (a == at_.end()) throw Error(ErrorCode::MissingParameter, "no value for parameter " + s.name());
    it = powers_.emplace(s, std::vector<Rational>{Rational(1), a->second}).first;
  }
  auto& v = it->second;
  while (v.size() <= e) v.push_back(Rational(v.back() * v[1]));
  return v[e];
}

Rational PointEvaluator::operator()(const ParamPolynomial& p) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [s, e] : m.factors()) t *= power(s, e);
    sum += t;
  }
  return sum;
}

Rational PointEvaluator::operator()(const ParamFraction& f) {
  Rational d = 1;
  for (const auto& [s, e] : f.denominator().factors()) d *= power(s, e);
  if (d == 0)
    throw Error(ErrorCode::DivisionByZero, "denominator " + f.denominator().to_string() + " vanishes at this point");
  Rational n = (*this)(f.numerator());
  return Rational(n / d);
}

// ----------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ParamFraction parse_all() {
    ParamFraction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamFraction expr() {
    ParamFraction r;
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  ParamFraction term() {
    ParamFraction r = factor();
    for (;;) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        ParamFraction d = factor();
        if (!d.is_polynomial() || d.numerator().term_count() != 1) fail("divisor must be a single term");
        const auto& [m, c] = d.numerator().leading_term();
        r = r.divided_by_term(c, m);
      } else {
        return r;
      }
    }
  }

  ParamFraction factor() {
    ParamFraction b = base();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      ParamFraction r(1);
      for (unsigned i = 0; i < e; ++i) r *= b;
      return r;
    }
    return b;
  }

  ParamFraction base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ParamFraction r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ParamFraction(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return ParamFraction::variable(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamFraction ParamFraction::parse(std::string_view text) { return Parser(text).parse_all(); }

ParamPolynomial ParamPolynomial::parse(std::string_view text) {
  ParamFraction f = ParamFraction::parse(text);
  if (!f.is_polynomial())
    throw Error(ErrorCode::Parse, "'" + std::string(text) + "' is not a polynomial");
  return f.numerator();
}

}  // namespace superhom
