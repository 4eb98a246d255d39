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

#ifndef QUADCERT_POLYNOMIAL_HPP
#define QUADCERT_POLYNOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadcert/rational.hpp"

namespace quadcert {

// Upper bound on the number of indeterminates in one ring. The largest ideal
// in this project (a Rabinowitsch-augmented coordinate scheme) uses 12.
inline constexpr std::size_t kMaxVars = 16;

/// Ordered list of distinct variable names. Copies share storage; two sets
/// compare equal iff they list the same names in the same order.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string_view> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  // A name not already present, derived from `hint`.
  std::string fresh_name(std::string_view hint) const;
  VarSet with_appended(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector. Unused slots (index >= VarSet size) stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t degree = 0;

  std::uint8_t operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const { return degree == 0; }

  // Bit i set iff variable i occurs; used to reject divisibility quickly.
  std::uint32_t support() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

class MonomialOrder {
 public:
  enum class Kind { lex, grlex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::grlex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  // Block elimination order: variables [0, split) form a grevlex block that
  // dominates the grevlex block [split, n).
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::block, split); }

  // Accepts "lex", "grlex", "grevlex" and "block(k)".
  static MonomialOrder parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  std::string name() const;

  // Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}
  Kind kind_;
  std::size_t split_;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// descending grevlex order with no zero coefficients, which makes the
/// representation canonical for a given VarSet.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  Polynomial() = default;
  explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarSet vars, const Rational& c);
  static Polynomial variable(VarSet vars, std::string_view name);
  static Polynomial variable(VarSet vars, std::size_t index);
  static Polynomial monomial(VarSet vars, const Monomial& m, const Rational& c);
  // Builds from arbitrary (possibly repeated, zero) terms.
  static Polynomial from_terms(VarSet vars, std::vector<Term> terms);

  const VarSet& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;

  // Leading term under `order`; precondition: nonzero.
  const Term& leading_term(const MonomialOrder& order) const;
  // Terms sorted descending under `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  Polynomial monic(const MonomialOrder& order) const;
  // Integer coefficients with gcd 1 and positive leading coefficient under
  // `order`; zero stays zero.
  Polynomial primitive(const MonomialOrder& order) const;

  // Re-expresses this polynomial over `target` by variable name.
  Polynomial embed(const VarSet& target) const;
  // Ring homomorphism sending variable i to images[i] (all over one VarSet).
  Polynomial compose(std::span<const Polynomial> images, const VarSet& target) const;
  // Coefficients c_k with this = sum_k c_k * var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial pow(unsigned n) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;
  void add_scaled(const Polynomial& other, const Rational& scale);

  VarSet vars_;
  std::vector<Term> terms_;
};

// Text form: terms in descending `order`, "*" between factors, "^" for
// powers, single-letter variables bare and longer names in brackets.
std::string format(const Polynomial& p, const MonomialOrder& order = MonomialOrder::grevlex());

// Parses sums/products/powers of rational literals, variables (single letters
// or [name]) and parenthesized subexpressions. Juxtaposition multiplies.
// Throws std::invalid_argument on syntax errors or unknown variables.
Polynomial parse_polynomial(std::string_view text, const VarSet& vars);

}  // namespace quadcert

#endif  // QUADCERT_POLYNOMIAL_HPP
