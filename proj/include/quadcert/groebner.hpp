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

#ifndef QUADCERT_GROEBNER_HPP
#define QUADCERT_GROEBNER_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadcert/polynomial.hpp"

namespace quadcert {

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // monic, ascending by leading monomial
  MonomialOrder order = MonomialOrder::grevlex();
  bool reduced = true;

  bool is_unit() const { return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero(); }
};

// Thrown when a computation passes BuchbergerOptions::deadline.
class GroebnerTimeout : public std::runtime_error {
 public:
  GroebnerTimeout() : std::runtime_error("groebner basis computation timed out") {}
};

enum class PairSelection {
  normal,  // smallest lcm first (ties: sugar, then creation order)
  sugar,   // smallest sugar degree first (ties: lcm)
  fifo,    // creation order
};

struct BuchbergerOptions {
  PairSelection selection = PairSelection::normal;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t reduction_steps = 0;
  std::size_t max_basis = 0;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor, in input order
  Polynomial remainder;
};

// Multivariate division: at each step the leading term of the running
// dividend is divided by the first listed divisor whose leading term divides
// it; otherwise it moves to the remainder. f = sum q_i g_i + r exactly.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
/// Uses Buchberger's product and chain criteria (Gebauer-Moeller update).
/// Zero generators are ignored; the zero ideal yields an empty basis.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr);

// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

enum class EliminationOrder { block, lex };

/// Generators of <gens> ∩ k[remaining variables], expressed over the
/// original VarSet. The dropped variables are moved in front internally so
/// that either a block order or lex eliminates them.
std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const std::string> drop_vars,
                                          EliminationOrder kind = EliminationOrder::block,
                                          const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr);

// f ∈ <gens> ?
bool ideal_membership(const Polynomial& f, std::span<const Polynomial> gens, const MonomialOrder& order,
                      const BuchbergerOptions& options = {});

// f ∈ sqrt(<gens>) ?  Adjoins a fresh variable y and tests whether the
// reduced basis of <gens, 1 - y f> is {1}.
bool radical_membership(const Polynomial& f, std::span<const Polynomial> gens,
                        const MonomialOrder& order = MonomialOrder::grevlex(), const BuchbergerOptions& options = {},
                        BuchbergerStats* stats = nullptr);

}  // namespace quadcert

#endif  // QUADCERT_GROEBNER_HPP
