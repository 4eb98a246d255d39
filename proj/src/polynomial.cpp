/*
   Copyright 2026 The quadcert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "quadcert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quadcert {

// ---------------------------------------------------------------- VarSet

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    for (char ch : n)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw std::invalid_argument("bad variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet::VarSet(std::initializer_list<std::string_view> names)
    : VarSet(std::vector<std::string>(names.begin(), names.end())) {}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto& n = *names_;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::string VarSet::fresh_name(std::string_view hint) const {
  std::string candidate(hint);
  for (int k = 1; index_of(candidate); ++k) candidate = std::string(hint) + std::to_string(k);
  return candidate;
}

VarSet VarSet::with_appended(std::string_view name) const {
  auto n = *names_;
  n.emplace_back(name);
  return VarSet(std::move(n));
}

// -------------------------------------------------------------- Monomial

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
  degree = static_cast<std::uint16_t>(degree - exp[i] + e);
  exp[i] = static_cast<std::uint8_t>(e);
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i]) mask |= 1u << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  m.degree = static_cast<std::uint16_t>(a.degree + b.degree);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
  m.degree = static_cast<std::uint16_t>(a.degree - b.degree);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    d += m.exp[i];
  }
  m.degree = static_cast<std::uint16_t>(d);
  return m;
}

// --------------------------------------------------------- MonomialOrder

namespace {

// Reverse-lexicographic tie break on [lo, hi): the monomial with the smaller
// exponent in the last differing variable is the larger one.
inline int revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

inline int lexcmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      return lexcmp(a, b);
    case Kind::grlex:
      if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
      return lexcmp(a, b);
    case Kind::grevlex:
      if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
      return revlex(a, b, 0, kMaxVars);
    case Kind::block: {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < split_; ++i) {
        da += a.exp[i];
        db += b.exp[i];
      }
      if (da != db) return da > db ? 1 : -1;
      if (int c = revlex(a, b, 0, split_)) return c;
      const unsigned ra = a.degree - da, rb = b.degree - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      return revlex(a, b, split_, kMaxVars);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grlex: return "grlex";
    case Kind::grevlex: return "grevlex";
    case Kind::block: return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "lex") return lex();
  if (text == "grlex") return grlex();
  if (text == "grevlex") return grevlex();
  if (text.size() > 7 && text.substr(0, 6) == "block(" && text.back() == ')') {
    const auto digits = text.substr(6, text.size() - 7);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      return block(std::stoul(std::string(digits)));
  }
  throw std::invalid_argument("unknown monomial order '" + std::string(text) + "'");
}

// ------------------------------------------------------------ Polynomial

namespace {

const MonomialOrder kStorageOrder = MonomialOrder::grevlex();

bool storage_greater(const Polynomial::Term& x, const Polynomial::Term& y) {
  return kStorageOrder.compare(x.monomial, y.monomial) > 0;
}

}  // namespace

Polynomial Polynomial::constant(VarSet vars, const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarSet vars, std::string_view name) {
  const std::size_t i = vars.require(name);
  return variable(std::move(vars), i);
}

Polynomial Polynomial::variable(VarSet vars, std::size_t index) {
  if (index >= vars.size()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(vars), m, 1);
}

Polynomial Polynomial::monomial(VarSet vars, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(VarSet vars, std::vector<Term> terms) {
  Polynomial p(std::move(vars));
  std::sort(terms.begin(), terms.end(), storage_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

int Polynomial::total_degree() const {
  // Storage order is degree-compatible.
  return terms_.empty() ? -1 : terms_.front().monomial.degree;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial[var]);
  return d;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

std::vector<Polynomial::Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  auto out = terms_;
  if (!(order == kStorageOrder))
    std::sort(out.begin(), out.end(), [&](const Term& x, const Term& y) { return order.compare(x.monomial, y.monomial) > 0; });
  return out;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_term(order).coeff;
  return *this * inv;
}

Polynomial Polynomial::primitive(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& t : terms_) {
    den = lcm(den, Integer(t.coeff.get_den()));
    num = gcd(num, Integer(t.coeff.get_num()));
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (leading_term(order).coeff < 0) scale = -scale;
  return *this * scale;
}

Polynomial Polynomial::embed(const VarSet& target) const {
  if (target == vars_) return *this;
  std::vector<std::size_t> map(vars_.size(), kMaxVars);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (auto j = target.index_of(vars_.name(i))) map[i] = *j;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!t.monomial[i]) continue;
      if (map[i] == kMaxVars)
        throw std::invalid_argument("variable '" + vars_.name(i) + "' missing from target ring");
      m.set(map[i], t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::compose(std::span<const Polynomial> images, const VarSet& target) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("compose: need one image per variable");
  for (const auto& img : images)
    if (!(img.vars() == target)) throw std::invalid_argument("compose: image over wrong ring");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.monomial[i]) term = term * power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    const unsigned k = m[var];
    m.set(var, 0);
    buckets[k].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(vars_, std::move(b)));
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: wrong number of values");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(vars_ == other.vars_)) throw std::invalid_argument("polynomials over different variable sets");
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& scale) {
  check_compatible(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    int c;
    if (i == terms_.end()) c = -1;
    else if (j == other.terms_.end()) c = 1;
    else c = kStorageOrder.compare(i->monomial, j->monomial);
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back({j->monomial, j->coeff * scale});
      ++j;
    } else {
      Rational s = i->coeff + j->coeff * scale;
      if (s != 0) out.push_back({i->monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
  return Polynomial::from_terms(a.vars_, std::move(prod));
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ------------------------------------------------------------ text format

namespace {

std::string var_token(const std::string& name) {
  return name.size() == 1 ? name : "[" + name + "]";
}

}  // namespace

std::string format(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.sorted_terms(order)) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    std::string factors;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      const unsigned e = t.monomial[i];
      if (!e) continue;
      if (!factors.empty()) factors += "*";
      factors += var_token(p.vars().name(i));
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += factors;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char ch) const {
    return std::isdigit(static_cast<unsigned char>(ch)) || std::isalpha(static_cast<unsigned char>(ch)) || ch == '[' || ch == '(';
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc(vars_);
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      const char ch = peek();
      if (ch != '+' && ch != '-') break;
      ++pos_;
      if (ch == '+') acc += term();
      else acc -= term();
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      const char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc = acc * power();
      } else if (ch == '/') {
        ++pos_;
        const Integer d = integer();
        if (d == 0) fail("division by zero");
        acc *= Rational(Integer(1), d);
      } else if (starts_factor(ch)) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      const Integer e = integer();
      if (e > 255) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial::constant(vars_, Rational(integer()));
    if (ch == '[') {
      const std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated '['");
      const auto name = text_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return variable(name);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const auto name = text_.substr(pos_, 1);
      ++pos_;
      return variable(name);
    }
    fail(ch ? "unexpected '" + std::string(1, ch) + "'" : "unexpected end of input");
  }

  Polynomial variable(std::string_view name) {
    auto i = vars_.index_of(name);
    if (!i) fail("unknown variable '" + std::string(name) + "'");
    return Polynomial::variable(vars_, *i);
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).parse();
}

}  // namespace quadcert
