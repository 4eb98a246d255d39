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

#ifndef QUADCERT_RADICAL_HPP
#define QUADCERT_RADICAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadcert/rational.hpp"

namespace quadcert {

/// Element of a multi-quadratic extension Q(sqrt(m1), ..., sqrt(mk)).
///
/// Stored as sum_m c_m * sqrt(m) over distinct square-free positive integers
/// m (m = 1 is the rational part). Square roots of distinct square-free
/// integers are linearly independent over Q, so the coordinate map is
/// canonical and the value is zero iff the map is empty. Products of basis
/// radicals are renormalized: sqrt(m) * sqrt(n) = g * sqrt(mn / g^2) with
/// g = gcd(m, n).
class RadicalValue {
 public:
  RadicalValue() = default;
  RadicalValue(const Rational& q);  // NOLINT(google-explicit-constructor)
  RadicalValue(long q) : RadicalValue(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  // c * sqrt(m); m must be square-free and positive.
  static RadicalValue term(const Rational& c, const Integer& squarefree);

  const std::map<Integer, Rational>& coordinates() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;

  RadicalValue& operator+=(const RadicalValue& other);
  RadicalValue& operator-=(const RadicalValue& other);
  RadicalValue& operator*=(const RadicalValue& other);

  friend RadicalValue operator+(RadicalValue a, const RadicalValue& b) { return a += b; }
  friend RadicalValue operator-(RadicalValue a, const RadicalValue& b) { return a -= b; }
  friend RadicalValue operator*(const RadicalValue& a, const RadicalValue& b);
  friend RadicalValue operator-(RadicalValue a);
  friend bool operator==(const RadicalValue& a, const RadicalValue& b) { return a.coords_ == b.coords_; }

  RadicalValue pow(unsigned n) const;

  // Multiplicative inverse by successive conjugation; throws
  // std::domain_error on zero.
  RadicalValue inverse() const;
  friend RadicalValue operator/(const RadicalValue& a, const RadicalValue& b) { return a * b.inverse(); }

  // Image under sqrt(p) -> -sqrt(p) for a prime p.
  RadicalValue conjugate(const Integer& prime) const;

 private:
  void accumulate(const Integer& key, const Rational& value);
  std::map<Integer, Rational> coords_;
};

// Splits n > 0 as square^2 * squarefree.
struct SquarefreeSplit {
  Integer root;        // largest s with s^2 | n
  Integer squarefree;  // n / s^2
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Exact sqrt(q) for q >= 0; p/r is normalized to sqrt(p*r)/r before the
/// square-free part is extracted. Throws std::domain_error if q < 0.
RadicalValue sqrt_rational(const Rational& q);

// Distinct primes of n > 0, ascending.
std::vector<Integer> prime_factors(const Integer& n);

/// Nonnegative square root of x inside a (possibly larger) multi-quadratic
/// field, or nullopt when x has none there. Any returned value has been
/// checked by squaring.
std::optional<RadicalValue> sqrt_radical(const RadicalValue& x);

/// Sign of x. Zero is decided from the coordinates; otherwise the value is
/// enclosed by outward-rounded MPFR intervals, starting at 64 bits and
/// doubling until the enclosure excludes zero (cap 65536 bits).
int rad_sign(const RadicalValue& x);

// "c0 + c1*sqrt(m1) + ..." with radicands ascending; "0" for zero.
std::string to_string(const RadicalValue& x);

// Nearest double, for display only.
double to_double(const RadicalValue& x);

}  // namespace quadcert

#endif  // QUADCERT_RADICAL_HPP
