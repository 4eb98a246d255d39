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

// Shared helpers for the unit suites: seeded random values and small
// oracles that do not go through the code under test.

#ifndef QUADCERT_TESTS_SUPPORT_HPP
#define QUADCERT_TESTS_SUPPORT_HPP

#include <mpfr.h>

#include <random>
#include <string>
#include <vector>

#include "quadcert/geometry.hpp"
#include "quadcert/polynomial.hpp"
#include "quadcert/radical.hpp"

namespace quadcert::testing {

inline Rational small_rational(std::mt19937_64& rng, int range = 9, int max_den = 5) {
  Rational q(std::uniform_int_distribution<int>(-range, range)(rng), std::uniform_int_distribution<int>(1, max_den)(rng));
  q.canonicalize();
  return q;
}

inline Polynomial random_poly(std::mt19937_64& rng, const VarSet& vars, int terms = 4, int max_exp = 3) {
  std::vector<Polynomial::Term> out;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < vars.size(); ++v) m.set(v, std::uniform_int_distribution<int>(0, max_exp)(rng));
    out.push_back({m, small_rational(rng)});
  }
  return Polynomial::from_terms(vars, out);
}

inline Point random_point(std::mt19937_64& rng, int range = 15, int max_den = 4) {
  return {small_rational(rng, range, max_den), small_rational(rng, range, max_den)};
}

inline QuadConfig random_config(std::mt19937_64& rng) {
  for (;;) {
    QuadConfig cfg(random_point(rng), random_point(rng), random_point(rng), random_point(rng));
    if (!cfg.has_coincident_points()) return cfg;
  }
}

// Value of a radical expression at `bits` of precision, straight from MPFR.
class Big {
 public:
  explicit Big(long bits = 400) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Big(const Big&) = delete;
  Big& operator=(const Big&) = delete;
  ~Big() { mpfr_clear(v_); }
  mpfr_t& get() { return v_; }

 private:
  mpfr_t v_;
};

inline int high_precision_sign(const RadicalValue& x) {
  Big total, term, root;
  for (const auto& [radicand, coeff] : x.coordinates()) {
    mpfr_set_z(root.get(), radicand.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
    mpfr_set_q(term.get(), coeff.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), root.get(), MPFR_RNDN);
    mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
  }
  return mpfr_sgn(total.get());
}

// Twice the signed area by the cross product.
inline Rational cross(const Point& o, const Point& p, const Point& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

}  // namespace quadcert::testing

#endif  // QUADCERT_TESTS_SUPPORT_HPP
