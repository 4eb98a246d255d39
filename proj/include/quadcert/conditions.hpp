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

#ifndef QUADCERT_CONDITIONS_HPP
#define QUADCERT_CONDITIONS_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quadcert/geometry.hpp"
#include "quadcert/polynomial.hpp"
#include "quadcert/radical.hpp"

namespace quadcert {

enum class ConditionId { P, Q, S, K, R, W, P_T, Q_T, R_T, K_T, S_T, W_T, K_1, R_1, K_G, Q_G, R_G, CM };

const std::vector<ConditionId>& all_conditions();
std::string condition_name(ConditionId id);
ConditionId parse_condition(std::string_view name);  // throws std::invalid_argument

// Variables a, b, c, d, e, f (side lengths AB, BC, CD, DA, diagonals AC, BD).
const VarSet& distance_vars();

/// Named condition polynomials over distance_vars(). The standard table is
/// built once; a modified copy is how mutation tests perturb an entry.
class ConditionTable {
 public:
  static const ConditionTable& standard();

  const Polynomial& operator[](ConditionId id) const { return polys_.at(id); }
  ConditionTable with(ConditionId id, Polynomial replacement) const;

 private:
  ConditionTable() = default;
  std::map<ConditionId, Polynomial> polys_;
};

const Polynomial& condition_poly(ConditionId id);

// CM expanded from the bordered 5x5 determinant with squared variables.
Polynomial cayley_menger_polynomial(const VarSet& vars, std::string_view a, std::string_view b, std::string_view c,
                                    std::string_view d, std::string_view e, std::string_view f);

enum class IdentityId { I1, I2, I3, IT, IT_S1, IT_S2, I5a, I5b, SYM1, SYM2, IG };

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);
IdentityId parse_identity(std::string_view name);  // throws std::invalid_argument

// Groups: "base" (I1 I2 I3), "tilted" (IT IT_S1 IT_S2),
// "symmetric" (I5a I5b SYM1 SYM2 IG).
std::string identity_group(IdentityId id);
std::vector<IdentityId> identities_in_group(std::string_view group);  // throws on unknown group

// Left side minus right side of the relation; zero iff it holds.
Polynomial identity_expression(IdentityId id, const ConditionTable& table = ConditionTable::standard());
std::string identity_text(IdentityId id);
bool verify_identity(IdentityId id, const ConditionTable& table = ConditionTable::standard());

/// Exact value of a polynomial in a..f at a = sqrt(qa), ..., f = sqrt(qf).
RadicalValue evaluate_at_distances(const Polynomial& p, const DistSextuple& d);
RadicalValue eval_condition(ConditionId id, const DistSextuple& d);

// Radical-free tests of cos(angle CDA) = -cos(angle CBA) and of
// cos(angle BAD) = cos(angle BCD), in squared distances only.
bool supplementary_witness(const DistSextuple& d);
bool equal_angle_witness(const DistSextuple& d);

/// Midpoint distance of the diagonals from the two closed forms valid when
/// R vanishes: (1/2) sqrt((bc+ad)^2/e^2) and the diagonal-free
/// (1/2) sqrt((bc+ad)(ab+cd)/(ac+bd)). Throws std::domain_error if R != 0.
struct MidpointFormulas {
  RadicalValue v_from_r;
  RadicalValue v_diag_free;
};
MidpointFormulas midpoint_v_formulas(const DistSextuple& d);

// Symbolic CM against the determinant on random positive sextuples.
bool cm_self_check(unsigned seed = 20240613, int samples = 50);

}  // namespace quadcert

#endif  // QUADCERT_CONDITIONS_HPP
