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

#include <gtest/gtest.h>

#include <random>

#include "quadcert/conditions.hpp"
#include "quadcert/generators.hpp"
#include "support.hpp"

namespace quadcert {
namespace {

using testing::random_config;

Polynomial dist(const char* text) { return parse_polynomial(text, distance_vars()); }

const DistSextuple kRectangle{9, 16, 9, 16, 25, 25};
const DistSextuple kFolded{16, 9, 16, 9, 25, Rational(49, 25)};
const DistSextuple kSquare{1, 1, 1, 1, 2, 2};
const DistSextuple kParallelogram{4, 1, 4, 1, 6, 4};

QuadConfig folded_rectangle() {
  return QuadConfig({0, 0}, {4, 0}, {4, 3}, {Rational(72, 25), Rational(-21, 25)});
}

bool zero(ConditionId id, const DistSextuple& d) { return eval_condition(id, d).is_zero(); }

// -------------------------------------------------------------- polynomials

TEST(ConditionPoly, PrintedForms) {
  EXPECT_EQ(condition_poly(ConditionId::P), dist("ac + bd - ef"));
  EXPECT_EQ(condition_poly(ConditionId::K), dist("e^2(ab+cd) - (a^2+b^2)cd - (c^2+d^2)ab"));
  EXPECT_EQ(condition_poly(ConditionId::R_T), dist("(ab-cd)^2 - f^2(a^2+b^2+c^2+d^2-e^2-f^2)"));
  EXPECT_EQ(condition_poly(ConditionId::Q_G), dist("-ac + bd + ef"));
}

TEST(ConditionPoly, NamesRoundTrip) {
  for (ConditionId id : all_conditions()) EXPECT_EQ(parse_condition(condition_name(id)), id);
  EXPECT_EQ(all_conditions().size(), 18u);
  EXPECT_THROW(parse_condition("Z"), std::invalid_argument);
}

TEST(ConditionPoly, CayleyMengerPolynomialMatchesDeterminant) {
  EXPECT_TRUE(cm_self_check());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const QuadConfig cfg = random_config(rng);
    EXPECT_TRUE(eval_condition(ConditionId::CM, cfg.distances()).is_zero());
  }
  EXPECT_EQ(eval_condition(ConditionId::CM, {1, 1, 1, 1, 1, 1}), RadicalValue(4));
}

// ----------------------------------------------------------------- identities

TEST(Identities, AllElevenExpandToZero) {
  ASSERT_EQ(all_identities().size(), 11u);
  for (IdentityId id : all_identities()) EXPECT_TRUE(verify_identity(id)) << identity_name(id);
}

TEST(Identities, Groups) {
  EXPECT_EQ(identities_in_group("base").size(), 3u);
  EXPECT_EQ(identities_in_group("tilted").size(), 3u);
  EXPECT_EQ(identities_in_group("symmetric"),
            (std::vector<IdentityId>{IdentityId::I5a, IdentityId::I5b, IdentityId::SYM1, IdentityId::SYM2, IdentityId::IG}));
  EXPECT_THROW(identities_in_group("nope"), std::invalid_argument);
  for (IdentityId id : all_identities()) EXPECT_EQ(parse_identity(identity_name(id)), id);
}

TEST(Identities, WrongMultiplierFails) {
  const Polynomial& K = condition_poly(ConditionId::K);
  const Polynomial& P = condition_poly(ConditionId::P);
  const Polynomial& Q = condition_poly(ConditionId::Q);
  const Polynomial& R = condition_poly(ConditionId::R);
  const Polynomial& CM = condition_poly(ConditionId::CM);
  const Polynomial good = Rational(2) * (K * K - P * Q * R) + dist("e^2") * CM;
  const Polynomial bad = Rational(2) * (K * K - P * Q * R) + dist("f^2") * CM;
  EXPECT_TRUE(good.is_zero());
  EXPECT_FALSE(bad.is_zero());
}

TEST(Identities, MutatingOneTermOfKBreaksTheIdentitiesUsingK) {
  const Polynomial& K = condition_poly(ConditionId::K);
  std::vector<Polynomial::Term> terms = K.terms();
  terms.front().coeff = -terms.front().coeff;
  const ConditionTable mutated = ConditionTable::standard().with(ConditionId::K, Polynomial::from_terms(distance_vars(), terms));
  EXPECT_FALSE(verify_identity(IdentityId::I2, mutated));
  EXPECT_FALSE(verify_identity(IdentityId::I3, mutated));
  EXPECT_TRUE(verify_identity(IdentityId::I1, mutated));
  for (IdentityId id : identities_in_group("tilted")) EXPECT_TRUE(verify_identity(id, mutated));
}

TEST(Identities, HoldNumericallyOnRandomConfigs) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const DistSextuple d = random_config(rng).distances();
    const RadicalValue k = eval_condition(ConditionId::K, d), p = eval_condition(ConditionId::P, d),
                       q = eval_condition(ConditionId::Q, d), r = eval_condition(ConditionId::R, d);
    EXPECT_EQ(k * k, p * q * r);  // CM = 0 for planar input
    const RadicalValue kt = eval_condition(ConditionId::K_T, d);
    EXPECT_EQ(kt * kt, eval_condition(ConditionId::P_T, d) * eval_condition(ConditionId::Q_T, d) *
                           eval_condition(ConditionId::R_T, d));
  }
}

// ----------------------------------------------------------------- evaluation

TEST(EvalCondition, SpecExamples) {
  EXPECT_TRUE(zero(ConditionId::P, kRectangle));
  EXPECT_TRUE(zero(ConditionId::R, kFolded));
  EXPECT_TRUE(zero(ConditionId::R_T, kParallelogram));
  EXPECT_EQ(eval_condition(ConditionId::P, kFolded), RadicalValue(18));  // 16 + 9 - 5 * 7/5
}

TEST(EvalCondition, FoldedRectangleWorkedInstance) {
  const QuadConfig cfg = folded_rectangle();
  const DistSextuple& d = cfg.distances();
  EXPECT_EQ(d, kFolded);
  EXPECT_TRUE(zero(ConditionId::R, d));
  EXPECT_TRUE(zero(ConditionId::K, d));
  EXPECT_EQ(rad_sign(eval_condition(ConditionId::P, d)), 1);
  EXPECT_TRUE(supplementary_witness(d));
}

// ------------------------------------------------------------------ witnesses

TEST(Witnesses, SupplementaryExamples) {
  EXPECT_TRUE(supplementary_witness(kFolded));
  EXPECT_TRUE(supplementary_witness(kSquare));
  EXPECT_FALSE(supplementary_witness(QuadConfig({0, 0}, {5, 1}, {4, 7}, {-1, 3}).distances()));
}

TEST(Witnesses, EqualAngleExamples) {
  EXPECT_TRUE(equal_angle_witness(QuadConfig({0, 0}, {1, 1}, {2, 0}, {1, -3}).distances()));
  EXPECT_TRUE(equal_angle_witness(kParallelogram));
  EXPECT_FALSE(equal_angle_witness(QuadConfig({0, 0}, {5, 1}, {4, 7}, {-1, 3}).distances()));
}

// ---------------------------------------------------------- midpoint formulas

TEST(MidpointFormulas, FoldedRectangle) {
  const QuadConfig cfg = folded_rectangle();
  const MidpointFormulas m = midpoint_v_formulas(cfg.distances());
  EXPECT_EQ(m.v_from_r, RadicalValue(Rational(12, 5)));
  EXPECT_EQ(m.v_diag_free, RadicalValue(Rational(12, 5)));
  const Point mac = midpoint(cfg.A(), cfg.C()), mbd = midpoint(cfg.B(), cfg.D());
  EXPECT_EQ(squared_distance(mac, mbd), Rational(144, 25));
}

TEST(MidpointFormulas, AgreeOnFoldedFamily) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const QuadConfig cfg = gen_folded(seed);
    const MidpointFormulas m = midpoint_v_formulas(cfg.distances());
    EXPECT_EQ(m.v_from_r, m.v_diag_free);
    EXPECT_EQ(m.v_from_r * m.v_from_r, RadicalValue(midpoint_distances(cfg.distances()).v1_sq));
  }
}

TEST(MidpointFormulas, CyclicInputRejected) {
  EXPECT_THROW(midpoint_v_formulas(gen_cyclic(std::uint64_t{3}, "ABCD").distances()), std::domain_error);
}

// ------------------------------------------------------------ theorem suites

TEST(TheoremProperties, PtolemyEqualityAndInequality) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    EXPECT_TRUE(zero(ConditionId::P, gen_cyclic(rng, i % 2 ? "ADCB" : "ABCD").distances()));
    const QuadConfig cfg = random_config(rng);
    if (cocircularity(cfg) != 0) EXPECT_EQ(rad_sign(eval_condition(ConditionId::P, cfg.distances())), 1);
  }
}

TEST(TheoremProperties, KAndSVanishExactlyWhenPDoes) {
  std::mt19937_64 rng(7);
  int cyclic = 0;
  for (int i = 0; i < 600; ++i) {
    const QuadConfig cfg = i % 3 == 0 ? gen_cyclic(rng, "ABCD") : i % 3 == 1 ? gen_folded(rng) : random_config(rng);
    const DistSextuple& d = cfg.distances();
    const bool lhs = zero(ConditionId::K, d) && zero(ConditionId::S, d);
    const bool rhs = zero(ConditionId::P, d);
    EXPECT_EQ(lhs, rhs);
    cyclic += rhs;
  }
  EXPECT_GE(cyclic, 200);
}

TEST(TheoremProperties, VanishingRGivesSupplementaryAngles) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const DistSextuple d = gen_folded(rng).distances();
    ASSERT_TRUE(zero(ConditionId::R, d));
    EXPECT_TRUE(supplementary_witness(d));
    EXPECT_TRUE(zero(ConditionId::K, d));
  }
}

TEST(TheoremProperties, VanishingRTGivesEqualAngles) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const QuadConfig cfg = i % 2 ? gen_reflected(rng) : gen_tilted_kite(rng, i % 4 == 0);
    const DistSextuple& d = cfg.distances();
    ASSERT_TRUE(zero(ConditionId::R_T, d));
    EXPECT_TRUE(equal_angle_witness(d));
    EXPECT_TRUE(zero(ConditionId::K_T, d));
  }
}

}  // namespace
}  // namespace quadcert
