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

#include "quadcert/radical.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quadcert {

// ---------------------------------------------------------- arithmetic

RadicalValue::RadicalValue(const Rational& q) {
  if (q != 0) coords_.emplace(Integer(1), q);
}

RadicalValue RadicalValue::term(const Rational& c, const Integer& squarefree) {
  if (squarefree <= 0) throw std::domain_error("radicand must be positive");
  RadicalValue v;
  if (c != 0) v.coords_.emplace(squarefree, c);
  return v;
}

bool RadicalValue::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 1);
}

Rational RadicalValue::rational_part() const {
  auto it = coords_.find(Integer(1));
  return it == coords_.end() ? Rational(0) : it->second;
}

void RadicalValue::accumulate(const Integer& key, const Rational& value) {
  auto [it, inserted] = coords_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coords_.erase(it);
  } else if (value == 0) {
    coords_.erase(it);
  }
}

RadicalValue& RadicalValue::operator+=(const RadicalValue& other) {
  for (const auto& [m, c] : other.coords_) accumulate(m, c);
  return *this;
}

RadicalValue& RadicalValue::operator-=(const RadicalValue& other) {
  for (const auto& [m, c] : other.coords_) accumulate(m, -c);
  return *this;
}

RadicalValue& RadicalValue::operator*=(const RadicalValue& other) {
  *this = *this * other;
  return *this;
}

RadicalValue operator*(const RadicalValue& a, const RadicalValue& b) {
  RadicalValue out;
  Integer g, key;
  for (const auto& [m, c] : a.coords_) {
    for (const auto& [n, d] : b.coords_) {
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
      // sqrt(m) sqrt(n) = g sqrt((m/g)(n/g)); m/g and n/g are coprime and
      // square-free, so the product is square-free.
      key = (m / g) * (n / g);
      Rational coeff = c * d;
      coeff *= Rational(g);
      out.accumulate(key, coeff);
    }
  }
  return out;
}

RadicalValue operator-(RadicalValue a) {
  for (auto& [m, c] : a.coords_) c = -c;
  return a;
}

RadicalValue RadicalValue::pow(unsigned n) const {
  RadicalValue result(Rational(1));
  RadicalValue base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

RadicalValue RadicalValue::conjugate(const Integer& prime) const {
  RadicalValue out = *this;
  for (auto& [m, c] : out.coords_)
    if (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) c = -c;
  return out;
}

namespace {
// Some prime dividing a radicand of x, or 1 when x is rational.
Integer some_radical_prime(const RadicalValue& x) {
  for (auto it = x.coordinates().rbegin(); it != x.coordinates().rend(); ++it)
    if (it->first != 1) return prime_factors(it->first).back();
  return Integer(1);
}
}  // namespace

RadicalValue RadicalValue::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  RadicalValue numerator(Rational(1)), current = *this;
  for (Integer p = some_radical_prime(current); p != 1; p = some_radical_prime(current)) {
    const RadicalValue conj = current.conjugate(p);
    numerator = numerator * conj;
    current = current * conj;
  }
  const Rational norm = current.rational_part();
  return numerator * RadicalValue(Rational(1) / norm);
}

// -------------------------------------------------- square-free splitting

namespace {

// Brent's variant of Pollard's rho; returns a nontrivial factor of the odd
// composite n.
Integer pollard_brent(const Integer& n) {
  for (unsigned long seed = 1;; ++seed) {
    Integer y = seed + 1, c = seed, m = 128, g = 1, r = 1, q = 1, x, ys, diff;
    auto f = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (Integer i = 0; i < r; ++i) f(y);
      Integer k = 0;
      do {
        ys = y;
        for (Integer i = 0; i < m && i < r - k; ++i) {
          f(y);
          diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        f(ys);
        diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_prime_factors(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    primes.push_back(n);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    collect_prime_factors(r, primes);
    collect_prime_factors(r, primes);
    return;
  }
  const Integer d = pollard_brent(n);
  collect_prime_factors(d, primes);
  collect_prime_factors(n / d, primes);
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n <= 0) throw std::domain_error("squarefree_split needs a positive integer");
  SquarefreeSplit out{Integer(1), Integer(1)};
  Integer rest = n;
  auto take = [&](const Integer& p) {
    unsigned k = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++k;
    }
    for (unsigned i = 0; i < k / 2; ++i) out.root *= p;
    if (k % 2) out.squarefree *= p;
  };
  for (unsigned long p = 2; p < 4096 && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) take(Integer(p));
  if (rest > 1) {
    std::vector<Integer> primes;
    collect_prime_factors(rest, primes);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes) take(p);
  }
  return out;
}

std::vector<Integer> prime_factors(const Integer& n) {
  if (n <= 0) throw std::domain_error("prime_factors needs a positive integer");
  std::vector<Integer> primes;
  Integer rest = n;
  for (unsigned long p = 2; p < 4096 && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest > 1) collect_prime_factors(rest, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

RadicalValue sqrt_rational(const Rational& q) {
  if (q < 0) throw std::domain_error("square root of a negative rational");
  if (q == 0) return {};
  const Integer product = q.get_num() * q.get_den();
  const SquarefreeSplit s = squarefree_split(product);
  Rational coeff(s.root, q.get_den());
  coeff.canonicalize();
  return RadicalValue::term(coeff, s.squarefree);
}

namespace {

// Writes x = alpha + beta*sqrt(p), with alpha and beta free of sqrt(p), and
// looks for (gamma + delta*sqrt(p))^2 = x: then gamma^2 + p delta^2 = alpha
// and 2 gamma delta = beta, so gamma^2 = (alpha +- sqrt(alpha^2 - p beta^2))/2.
std::optional<RadicalValue> field_sqrt(const RadicalValue& x) {
  if (x.is_zero()) return RadicalValue();
  if (x.is_rational()) {
    if (x.rational_part() < 0) return std::nullopt;
    return sqrt_rational(x.rational_part());
  }
  const Integer p = some_radical_prime(x);
  RadicalValue alpha, beta;
  for (const auto& [m, c] : x.coordinates()) {
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) beta += RadicalValue::term(c, m / p);
    else alpha += RadicalValue::term(c, m);
  }
  const RadicalValue root_p = RadicalValue::term(Rational(1), p);
  auto check = [&](const RadicalValue& cand) -> std::optional<RadicalValue> {
    if (cand * cand == x) return cand;
    return std::nullopt;
  };
  const auto norm_root = field_sqrt(alpha * alpha - beta * beta * RadicalValue(Rational(p)));
  if (!norm_root) return std::nullopt;
  for (int s : {1, -1}) {
    const RadicalValue gamma_sq = (alpha + RadicalValue(Rational(s)) * *norm_root) * RadicalValue(Rational(1, 2));
    if (gamma_sq.is_zero()) {
      if (const auto delta = field_sqrt(alpha * RadicalValue(Rational(1) / Rational(p))))
        if (auto hit = check(*delta * root_p)) return hit;
      continue;
    }
    const auto gamma = field_sqrt(gamma_sq);
    if (!gamma) continue;
    const RadicalValue delta = beta * (*gamma * RadicalValue(Rational(2))).inverse();
    if (auto hit = check(*gamma + delta * root_p)) return hit;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RadicalValue> sqrt_radical(const RadicalValue& x) {
  auto root = field_sqrt(x);
  if (root && rad_sign(*root) < 0) root = -*root;
  return root;
}

// ------------------------------------------------------------------ sign

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

int interval_sign(const RadicalValue& x, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec), sl(prec), su(prec), cl(prec), cu(prec), tl(prec), tu(prec);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  for (const auto& [m, c] : x.coordinates()) {
    mpfr_set_z(sl.get(), m.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(sl.get(), sl.get(), MPFR_RNDD);
    mpfr_set_z(su.get(), m.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(su.get(), su.get(), MPFR_RNDU);
    mpfr_set_q(cl.get(), c.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(cu.get(), c.get_mpq_t(), MPFR_RNDU);
    if (c > 0) {
      mpfr_mul(tl.get(), cl.get(), sl.get(), MPFR_RNDD);
      mpfr_mul(tu.get(), cu.get(), su.get(), MPFR_RNDU);
    } else {
      mpfr_mul(tl.get(), cl.get(), su.get(), MPFR_RNDD);
      mpfr_mul(tu.get(), cu.get(), sl.get(), MPFR_RNDU);
    }
    mpfr_add(lo.get(), lo.get(), tl.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), tu.get(), MPFR_RNDU);
  }
  if (mpfr_sgn(lo.get()) > 0) return 1;
  if (mpfr_sgn(hi.get()) < 0) return -1;
  return 0;
}

}  // namespace

int rad_sign(const RadicalValue& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.rational_part());
  for (mpfr_prec_t prec = 64; prec <= 65536; prec *= 2)
    if (int s = interval_sign(x, prec)) return s;
  throw std::logic_error("rad_sign: precision cap reached for a nonzero value");
}

std::string to_string(const RadicalValue& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.coordinates()) {
    const bool negative = c < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    const Rational mag = abs(c);
    if (m == 1) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += "sqrt(" + m.get_str() + ")";
    }
  }
  return out;
}

double to_double(const RadicalValue& x) {
  Mpfr acc(128), t(128), s(128);
  mpfr_set_zero(acc.get(), 1);
  for (const auto& [m, c] : x.coordinates()) {
    mpfr_set_z(s.get(), m.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(s.get(), s.get(), MPFR_RNDN);
    mpfr_set_q(t.get(), c.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), s.get(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
  }
  return mpfr_get_d(acc.get(), MPFR_RNDN);
}

}  // namespace quadcert
