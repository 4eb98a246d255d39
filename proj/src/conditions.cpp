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

#include "quadcert/conditions.hpp"

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>

#include "quadcert/determinant.hpp"

namespace quadcert {

namespace {

struct NamedCondition {
  ConditionId id;
  const char* name;
  const char* text;  // empty for CM, which comes from the determinant
};

// The tilted W carries +ac in front of its first bracket: that is the exact
// quotient (S_T^2 + CM/2) / P_T.
constexpr NamedCondition kConditions[] = {
    {ConditionId::P, "P", "ac + bd - ef"},
    {ConditionId::Q, "Q", "ac + bd + ef"},
    {ConditionId::S, "S", "e(ab + cd) - f(ad + bc)"},
    {ConditionId::K, "K", "e^2(ab + cd) - (a^2 + b^2)cd - (c^2 + d^2)ab"},
    {ConditionId::R, "R", "(bc + ad)^2 - e^2(a^2 + b^2 + c^2 + d^2 - e^2 - f^2)"},
    {ConditionId::W, "W",
     "ac(-a^2 - c^2 + b^2 + d^2 + e^2 + f^2) + bd(a^2 + c^2 - b^2 - d^2 + e^2 + f^2)"
     " - ef(a^2 + b^2 + c^2 + d^2 - e^2 - f^2)"},
    {ConditionId::P_T, "P_T", "ac - bd + ef"},
    {ConditionId::Q_T, "Q_T", "ac - bd - ef"},
    {ConditionId::R_T, "R_T", "(ab - cd)^2 - f^2(a^2 + b^2 + c^2 + d^2 - e^2 - f^2)"},
    {ConditionId::K_T, "K_T", "f^2(bc - ad) - bc(a^2 + d^2) + ad(b^2 + c^2)"},
    {ConditionId::S_T, "S_T", "f(bc - ad) - e(cd - ab)"},
    {ConditionId::W_T, "W_T",
     "ac(-a^2 + b^2 - c^2 + d^2 + e^2 + f^2) - bd(a^2 - b^2 + c^2 - d^2 + e^2 + f^2)"
     " + ef(a^2 + b^2 + c^2 + d^2 - e^2 - f^2)"},
    {ConditionId::K_1, "K_1", "(ad + bc)f^2 - (a^2 + d^2)bc - (b^2 + c^2)ad"},
    {ConditionId::R_1, "R_1", "(ab + cd)^2 - f^2(a^2 + b^2 + c^2 + d^2 - e^2 - f^2)"},
    {ConditionId::K_G, "K_G", "(af - ce)d^2 + ce(a^2 + f^2) - (c^2 + e^2)af"},
    {ConditionId::Q_G, "Q_G", "-ac + bd + ef"},
    {ConditionId::R_G, "R_G", "(a^2 - b^2 + c^2 - d^2 + e^2 + f^2)d^2 - (ae - cf)^2"},
    {ConditionId::CM, "CM", ""},
};

struct NamedIdentity {
  IdentityId id;
  const char* name;
  const char* group;
  const char* text;
};

constexpr NamedIdentity kIdentities[] = {
    {IdentityId::I1, "I1", "base", "-P*W + S^2 + CM/2 = 0"},
    {IdentityId::I2, "I2", "base", "-e*S + K + (bc + ad)*P = 0"},
    {IdentityId::I3, "I3", "base", "2(K^2 - P*Q*R) + e^2*CM = 0"},
    {IdentityId::IT, "IT", "tilted", "f^2*CM = 2(P_T*Q_T*R_T - K_T^2)"},
    {IdentityId::IT_S1, "IT_S1", "tilted", "-f*S_T + K_T - (cd - ab)*P_T = 0"},
    {IdentityId::IT_S2, "IT_S2", "tilted", "-P_T*W_T + S_T^2 + CM/2 = 0"},
    {IdentityId::I5a, "I5a", "symmetric", "2(K_1^2 - P*Q*R_1) + f^2*CM = 0"},
    {IdentityId::I5b, "I5b", "symmetric", "f*S + K_1 + (ab + cd)*P = 0"},
    {IdentityId::SYM1, "SYM1", "symmetric", "(f - e)*S + K + K_1 + (ab + cd + bc + ad)*P = 0"},
    {IdentityId::SYM2, "SYM2", "symmetric", "2(K^2 + K_1^2 - P*Q*(R + R_1)) + (e^2 + f^2)*CM = 0"},
    {IdentityId::IG, "IG", "symmetric", "CM*d^2/2 = P*Q_G*R_G - K_G^2"},
};

const NamedCondition& lookup(ConditionId id) {
  for (const auto& c : kConditions)
    if (c.id == id) return c;
  throw std::invalid_argument("unknown condition id");
}

const NamedIdentity& lookup(IdentityId id) {
  for (const auto& c : kIdentities)
    if (c.id == id) return c;
  throw std::invalid_argument("unknown identity id");
}

}  // namespace

// ------------------------------------------------------------- conditions

const std::vector<ConditionId>& all_conditions() {
  static const std::vector<ConditionId> ids = [] {
    std::vector<ConditionId> out;
    for (const auto& c : kConditions) out.push_back(c.id);
    return out;
  }();
  return ids;
}

std::string condition_name(ConditionId id) { return lookup(id).name; }

ConditionId parse_condition(std::string_view name) {
  for (const auto& c : kConditions)
    if (name == c.name) return c.id;
  throw std::invalid_argument("unknown condition '" + std::string(name) + "'");
}

const VarSet& distance_vars() {
  static const VarSet vars{"a", "b", "c", "d", "e", "f"};
  return vars;
}

Polynomial cayley_menger_polynomial(const VarSet& vars, std::string_view a, std::string_view b, std::string_view c,
                                    std::string_view d, std::string_view e, std::string_view f) {
  auto sq = [&](std::string_view name) { return Polynomial::variable(vars, name).pow(2); };
  const Polynomial o(vars), l = Polynomial::constant(vars, Rational(1));
  const Polynomial qa = sq(a), qb = sq(b), qc = sq(c), qd = sq(d), qe = sq(e), qf = sq(f);
  return determinant<Polynomial>(
      {{o, l, l, l, l}, {l, o, qa, qe, qd}, {l, qa, o, qb, qf}, {l, qe, qb, o, qc}, {l, qd, qf, qc, o}});
}

const ConditionTable& ConditionTable::standard() {
  static const ConditionTable table = [] {
    ConditionTable t;
    for (const auto& c : kConditions) {
      t.polys_.emplace(c.id, c.id == ConditionId::CM
                                 ? cayley_menger_polynomial(distance_vars(), "a", "b", "c", "d", "e", "f")
                                 : parse_polynomial(c.text, distance_vars()));
    }
    return t;
  }();
  return table;
}

ConditionTable ConditionTable::with(ConditionId id, Polynomial replacement) const {
  ConditionTable copy = *this;
  copy.polys_[id] = std::move(replacement);
  return copy;
}

const Polynomial& condition_poly(ConditionId id) { return ConditionTable::standard()[id]; }

// -------------------------------------------------------------- identities

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& c : kIdentities) out.push_back(c.id);
    return out;
  }();
  return ids;
}

std::string identity_name(IdentityId id) { return lookup(id).name; }
std::string identity_group(IdentityId id) { return lookup(id).group; }
std::string identity_text(IdentityId id) { return lookup(id).text; }

IdentityId parse_identity(std::string_view name) {
  for (const auto& c : kIdentities)
    if (name == c.name) return c.id;
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::vector<IdentityId> identities_in_group(std::string_view group) {
  std::vector<IdentityId> out;
  for (const auto& c : kIdentities)
    if (group == "all" || group == c.group) out.push_back(c.id);
  if (out.empty()) throw std::invalid_argument("unknown identity group '" + std::string(group) + "'");
  return out;
}

Polynomial identity_expression(IdentityId id, const ConditionTable& t) {
  using C = ConditionId;
  const VarSet& vars = distance_vars();
  auto v = [&](const char* text) { return parse_polynomial(text, vars); };
  const Polynomial &P = t[C::P], &Q = t[C::Q], &S = t[C::S], &K = t[C::K], &R = t[C::R], &W = t[C::W];
  const Polynomial &PT = t[C::P_T], &QT = t[C::Q_T], &RT = t[C::R_T], &KT = t[C::K_T], &ST = t[C::S_T],
                   &WT = t[C::W_T];
  const Polynomial &K1 = t[C::K_1], &R1 = t[C::R_1], &KG = t[C::K_G], &QG = t[C::Q_G], &RG = t[C::R_G],
                   &CM = t[C::CM];
  const Rational half(1, 2);
  switch (id) {
    case IdentityId::I1: return -(P * W) + S * S + CM * half;
    case IdentityId::I2: return -(v("e") * S) + K + v("bc + ad") * P;
    case IdentityId::I3: return Rational(2) * (K * K - P * Q * R) + v("e^2") * CM;
    case IdentityId::IT: return v("f^2") * CM - Rational(2) * (PT * QT * RT - KT * KT);
    case IdentityId::IT_S1: return -(v("f") * ST) + KT - v("cd - ab") * PT;
    case IdentityId::IT_S2: return -(PT * WT) + ST * ST + CM * half;
    case IdentityId::I5a: return Rational(2) * (K1 * K1 - P * Q * R1) + v("f^2") * CM;
    case IdentityId::I5b: return v("f") * S + K1 + v("ab + cd") * P;
    case IdentityId::SYM1: return v("f - e") * S + K + K1 + v("ab + cd + bc + ad") * P;
    case IdentityId::SYM2: return Rational(2) * (K * K + K1 * K1 - P * Q * (R + R1)) + v("e^2 + f^2") * CM;
    case IdentityId::IG: return CM * v("d^2") * half - (P * QG * RG - KG * KG);
  }
  throw std::invalid_argument("unknown identity id");
}

bool verify_identity(IdentityId id, const ConditionTable& table) { return identity_expression(id, table).is_zero(); }

// -------------------------------------------------------------- evaluation

RadicalValue evaluate_at_distances(const Polynomial& p, const DistSextuple& d) {
  if (!(p.vars() == distance_vars())) throw std::invalid_argument("polynomial is not over a..f");
  const std::array<const Rational*, 6> squares{&d.qa, &d.qb, &d.qc, &d.qd, &d.qe, &d.qf};
  std::array<std::optional<RadicalValue>, 6> roots;  // filled on first odd power
  RadicalValue total;
  for (const auto& term : p.terms()) {
    // Even powers stay rational; only an odd leftover touches the radicals.
    Rational rational = term.coeff;
    RadicalValue radical(Rational(1));
    for (std::size_t i = 0; i < 6; ++i) {
      const unsigned e = term.monomial[i];
      if (e == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), squares[i]->get_num_mpz_t(), e / 2);
      mpz_pow_ui(power.get_den_mpz_t(), squares[i]->get_den_mpz_t(), e / 2);
      rational *= power;
      if (e % 2) {
        if (!roots[i]) roots[i] = sqrt_rational(*squares[i]);
        radical = radical * *roots[i];
      }
    }
    total += radical * RadicalValue(rational);
  }
  return total;
}

RadicalValue eval_condition(ConditionId id, const DistSextuple& d) {
  return evaluate_at_distances(condition_poly(id), d);
}

namespace {

// lhs_weight * x^2 == rhs_weight * y^2 with a prescribed sign relation.
bool weighted_square_match(const Rational& lhs_weight, const Rational& x, const Rational& rhs_weight,
                           const Rational& y, bool same_sign) {
  if (lhs_weight * x * x != rhs_weight * y * y) return false;
  const int sx = sgn(x), sy = sgn(y);
  if (sx == 0 || sy == 0) return sx == sy;
  return same_sign ? sx == sy : sx == -sy;
}

}  // namespace

bool supplementary_witness(const DistSextuple& d) {
  return weighted_square_match(d.qa * d.qb, d.qe - d.qc - d.qd, d.qc * d.qd, d.qe - d.qa - d.qb, false);
}

bool equal_angle_witness(const DistSextuple& d) {
  return weighted_square_match(d.qb * d.qc, d.qf - d.qa - d.qd, d.qa * d.qd, d.qf - d.qb - d.qc, true);
}

MidpointFormulas midpoint_v_formulas(const DistSextuple& d) {
  if (!eval_condition(ConditionId::R, d).is_zero()) throw std::domain_error("midpoint formulas need R = 0");
  const VarSet& vars = distance_vars();
  const RadicalValue bc_ad = evaluate_at_distances(parse_polynomial("bc + ad", vars), d);
  const RadicalValue ab_cd = evaluate_at_distances(parse_polynomial("ab + cd", vars), d);
  const RadicalValue ac_bd = evaluate_at_distances(parse_polynomial("ac + bd", vars), d);
  const RadicalValue half(Rational(1, 2));

  const auto from_r = sqrt_radical(bc_ad * bc_ad * RadicalValue(Rational(1) / d.qe));
  const auto diag_free = sqrt_radical(bc_ad * ab_cd * ac_bd.inverse());
  if (!from_r || !diag_free) throw std::domain_error("midpoint radicand is not a square in the field");
  return {half * *from_r, half * *diag_free};
}

bool cm_self_check(unsigned seed, int samples) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(1, 400), den(1, 30);
  for (int i = 0; i < samples; ++i) {
    DistSextuple d{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                   Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    for (Rational* q : {&d.qa, &d.qb, &d.qc, &d.qd, &d.qe, &d.qf}) q->canonicalize();
    if (evaluate_at_distances(condition_poly(ConditionId::CM), d) != RadicalValue(cayley_menger(d))) return false;
  }
  return true;
}

}  // namespace quadcert
