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

#include <algorithm>
#include <random>

#include "quadcert/certificates.hpp"
#include "quadcert/conditions.hpp"
#include "quadcert/groebner.hpp"
#include "quadcert/polynomial.hpp"
#include "support.hpp"

namespace quadcert {
namespace {

using testing::random_poly;
using testing::small_rational;

const VarSet kXY{"x", "y"};
const VarSet kXYZ{"x", "y", "z"};

Polynomial xy(const char* text) { return parse_polynomial(text, kXY); }
Polynomial xyz(const char* text) { return parse_polynomial(text, kXYZ); }

std::vector<std::string> texts(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators) out.push_back(format(g, gb.order));
  return out;
}

Monomial mono(std::initializer_list<unsigned> exps) {
  Monomial m;
  std::size_t i = 0;
  for (unsigned e : exps) m.set(i++, e);
  return m;
}

// ----------------------------------------------------------------- Rational

TEST(RationalText, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_THROW(parse_rational("3/-6"), std::invalid_argument);  // sign goes on the numerator
}

TEST(RationalText, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "2//3", "1/2/3"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(RationalText, RoundTripsRandomValues) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational q = small_rational(rng, 100000, 99999);
    EXPECT_EQ(parse_rational(to_string(q)), q);
    EXPECT_GT(q.get_den(), 0);
    EXPECT_EQ(gcd(q.get_num(), q.get_den()), 1);
  }
}

// --------------------------------------------------------- VarSet, parsing

TEST(VarSetTest, RejectsDuplicatesAndFindsNames) {
  EXPECT_THROW(VarSet({"x", "x"}), std::invalid_argument);
  const VarSet v{"a", "b", "eta"};
  EXPECT_EQ(v.require("eta"), 2u);
  EXPECT_FALSE(v.index_of("q").has_value());
  EXPECT_THROW(v.require("q"), std::invalid_argument);
  const std::string fresh = v.fresh_name("a");
  EXPECT_FALSE(v.index_of(fresh).has_value());
  EXPECT_EQ(v.with_appended("t").size(), 4u);
}

TEST(PolyText, ParsesJuxtapositionPowersAndBrackets) {
  const VarSet v{"a", "b", "eta"};
  const Polynomial p = parse_polynomial("2a b^2 - [eta](a+b)", v);
  const Polynomial q = parse_polynomial("2*a*b^2 - [eta]*a - [eta]*b", v);
  EXPECT_EQ(p, q);
  EXPECT_THROW(parse_polynomial("a + q", v), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("a +", v), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("(a", v), std::invalid_argument);
}

TEST(PolyText, FormatRoundTripsUnderEveryOrder) {
  std::mt19937_64 rng(5);
  const VarSet v{"a", "b", "c", "tt"};
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(), MonomialOrder::block(2)}) {
    for (int i = 0; i < 100; ++i) {
      const Polynomial p = random_poly(rng, v, 5, 4);
      EXPECT_EQ(parse_polynomial(format(p, order), v), p);
    }
  }
}

TEST(PolyText, ZeroPrintsAsZero) { EXPECT_EQ(format(Polynomial(kXY)), "0"); }

// -------------------------------------------------------------- arithmetic

TEST(PolyArith, DifferenceOfSquares) { EXPECT_EQ(xy("(x+y)*(x-y)"), xy("x^2-y^2")); }

TEST(PolyArith, AdditiveIdentity) {
  const Polynomial p = xy("3x^2y - 1/2");
  EXPECT_EQ(p + Polynomial(kXY), p);
}

TEST(PolyArith, PtolemyTimesItsPartner) {
  const VarSet& d = distance_vars();
  EXPECT_EQ(parse_polynomial("(ac+bd-ef)*(ac+bd+ef)", d), parse_polynomial("a^2c^2+2abcd+b^2d^2-e^2f^2", d));
}

TEST(PolyArith, MismatchedRingsThrow) {
  EXPECT_THROW(xy("x") + xyz("x"), std::invalid_argument);
  EXPECT_THROW(xy("x") * xyz("x"), std::invalid_argument);
}

TEST(PolyArith, NoZeroCoefficientsAreStored) {
  const Polynomial p = xy("x + y - x");
  ASSERT_EQ(p.size(), 1u);
  for (const auto& t : p.terms()) EXPECT_NE(t.coeff, 0);
}

TEST(PolyArith, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const Polynomial p = random_poly(rng, kXYZ), q = random_poly(rng, kXYZ), r = random_poly(rng, kXYZ);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.pow(3), p * p * p);
  }
}

TEST(PolyArith, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const Polynomial p = random_poly(rng, kXYZ), q = random_poly(rng, kXYZ);
    const std::vector<Rational> pt{small_rational(rng), small_rational(rng), small_rational(rng)};
    EXPECT_EQ((p * q).evaluate(pt), p.evaluate(pt) * q.evaluate(pt));
    EXPECT_EQ((p + q).evaluate(pt), p.evaluate(pt) + q.evaluate(pt));
  }
}

TEST(PolyArith, CoefficientsInRebuildThePolynomial) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const Polynomial p = random_poly(rng, kXYZ, 6);
    const auto coeffs = p.coefficients_in(2);
    Polynomial rebuilt(kXYZ);
    for (std::size_t k = 0; k < coeffs.size(); ++k) rebuilt += coeffs[k] * Polynomial::variable(kXYZ, 2).pow(k);
    EXPECT_EQ(rebuilt, p);
  }
}

// ----------------------------------------------------------- monomial orders

TEST(MonomialOrderTest, TextbookComparisons) {
  // x > y > z
  EXPECT_GT(MonomialOrder::lex().compare(mono({1, 2, 0}), mono({0, 3, 4})), 0);
  EXPECT_GT(MonomialOrder::grlex().compare(mono({1, 2, 4}), mono({1, 1, 5})), 0);
  EXPECT_GT(MonomialOrder::grevlex().compare(mono({1, 5, 2}), mono({4, 1, 3})), 0);
  EXPECT_LT(MonomialOrder::grlex().compare(mono({1, 5, 2}), mono({4, 1, 3})), 0);
  // block(1): x dominates any power of y, z
  EXPECT_GT(MonomialOrder::block(1).compare(mono({1, 0, 0}), mono({0, 9, 9})), 0);
}

TEST(MonomialOrderTest, ParseNames) {
  EXPECT_EQ(MonomialOrder::parse("block(3)"), MonomialOrder::block(3));
  EXPECT_EQ(MonomialOrder::parse("grevlex").name(), "grevlex");
  EXPECT_THROW(MonomialOrder::parse("revlex"), std::invalid_argument);
}

TEST(MonomialOrderTest, TotalMultiplicativeWellOrdered) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 4);
  auto rnd = [&] { return mono({unsigned(e(rng)), unsigned(e(rng)), unsigned(e(rng))}); };
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(), MonomialOrder::block(1),
                            MonomialOrder::block(2)}) {
    for (int i = 0; i < 300; ++i) {
      const Monomial u = rnd(), v = rnd(), w = rnd();
      const int uv = order.compare(u, v);
      EXPECT_EQ(uv > 0, order.compare(v, u) < 0);
      EXPECT_EQ(uv < 0, order.compare(v, u) > 0);
      EXPECT_EQ(uv == 0, u == v);
      if (uv < 0) EXPECT_LT(order.compare(u * w, v * w), 0);
      if (order.compare(u, v) < 0 && order.compare(v, w) < 0) EXPECT_LT(order.compare(u, w), 0);
      if (!u.is_one()) EXPECT_GT(order.compare(u, Monomial{}), 0);
    }
  }
}

// ----------------------------------------------------------------- division

TEST(NormalForm, SpecExamples) {
  const auto lex = MonomialOrder::lex();
  const std::vector<Polynomial> x{xy("x")}, lin{xy("x+1"), xy("y+1")};
  EXPECT_TRUE(normal_form(xy("x^2"), x, lex).is_zero());
  EXPECT_EQ(normal_form(xy("x^2+y"), x, lex), xy("y"));
  EXPECT_EQ(normal_form(xy("xy+1"), lin, lex), xy("2"));
}

TEST(NormalForm, DivisionCertificateReexpands) {
  std::mt19937_64 rng(41);
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
    for (int i = 0; i < 60; ++i) {
      const std::vector<Polynomial> divisors{random_poly(rng, kXYZ, 3, 2), random_poly(rng, kXYZ, 3, 2)};
      if (divisors[0].is_zero() || divisors[1].is_zero()) continue;
      const Polynomial f = random_poly(rng, kXYZ, 6, 3);
      const DivisionResult res = divide(f, divisors, order);
      Polynomial sum = res.remainder;
      for (std::size_t k = 0; k < divisors.size(); ++k) sum += res.quotients[k] * divisors[k];
      EXPECT_EQ(sum, f);
      for (const auto& t : res.remainder.terms())
        for (const auto& g : divisors) EXPECT_FALSE(g.leading_term(order).monomial.divides(t.monomial));
    }
  }
}

TEST(NormalForm, DivisionByZeroThrows) {
  const std::vector<Polynomial> zero{Polynomial(kXY)};
  EXPECT_THROW(normal_form(xy("x"), zero, MonomialOrder::lex()), std::invalid_argument);
}

// --------------------------------------------------------------- Buchberger

TEST(Buchberger, LinearSpan) {
  const std::vector<Polynomial> g{xy("x+y"), xy("x-y")};
  EXPECT_EQ(texts(buchberger(g, MonomialOrder::lex())), (std::vector<std::string>{"y", "x"}));
}

TEST(Buchberger, CircleMeetsDiagonal) {
  const std::vector<Polynomial> g{xy("x^2+y^2-1"), xy("x-y")};
  const GroebnerBasis gb = buchberger(g, MonomialOrder::lex());
  ASSERT_EQ(gb.generators.size(), 2u);
  EXPECT_EQ(gb.generators[0], xy("y^2-1/2"));
  EXPECT_EQ(gb.generators[1], xy("x-y"));
  // Same ideal: each side reduces to zero modulo the other.
  for (const auto& p : g) EXPECT_TRUE(normal_form(p, gb.generators, gb.order).is_zero());
  const GroebnerBasis back = buchberger(g, MonomialOrder::lex());
  for (const auto& p : gb.generators) EXPECT_TRUE(normal_form(p, back.generators, gb.order).is_zero());
}

TEST(Buchberger, SingleMonomialIsAlreadyABasis) {
  const std::vector<Polynomial> g{xy("x^2")};
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()})
    EXPECT_EQ(texts(buchberger(g, order)), (std::vector<std::string>{"x^2"}));
}

TEST(Buchberger, UnitIdealAndZeroIdeal) {
  const std::vector<Polynomial> unit{xy("x"), xy("x+1")};
  EXPECT_TRUE(buchberger(unit, MonomialOrder::grevlex()).is_unit());
  const std::vector<Polynomial> zero{Polynomial(kXY)};
  EXPECT_TRUE(buchberger(zero, MonomialOrder::grevlex()).generators.empty());
}

TEST(Buchberger, ReducedBasisIsUniqueAcrossShufflesAndStrategies) {
  std::mt19937_64 rng(51);
  const std::vector<Polynomial> base{xyz("x^2 + y z - 2"), xyz("y^2 - x z + 1"), xyz("x y z - 3"), xyz("x + y + z - 1")};
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    const GroebnerBasis ref = buchberger(base, order);
    for (int i = 0; i < 6; ++i) {
      std::vector<Polynomial> g = base;
      std::shuffle(g.begin(), g.end(), rng);
      for (auto& p : g) p *= Rational(std::uniform_int_distribution<int>(1, 7)(rng), 3);
      for (PairSelection sel : {PairSelection::normal, PairSelection::sugar, PairSelection::fifo}) {
        BuchbergerOptions opts;
        opts.selection = sel;
        EXPECT_EQ(texts(buchberger(g, order, opts)), texts(ref));
      }
    }
  }
}

TEST(Buchberger, OutputBasesPassTheSPolynomialTest) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial> g{random_poly(rng, kXYZ, 3, 2), random_poly(rng, kXYZ, 3, 2), random_poly(rng, kXYZ, 2, 2)};
    const GroebnerBasis gb = buchberger(g, MonomialOrder::grevlex());
    EXPECT_TRUE(is_groebner_basis(gb.generators, gb.order));
    // Reduced: monic and no term divisible by another leading term.
    for (std::size_t a = 0; a < gb.generators.size(); ++a) {
      EXPECT_EQ(gb.generators[a].leading_term(gb.order).coeff, 1);
      for (std::size_t b = 0; b < gb.generators.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : gb.generators[a].terms())
          EXPECT_FALSE(gb.generators[b].leading_term(gb.order).monomial.divides(t.monomial));
      }
    }
    for (const auto& p : g) EXPECT_TRUE(normal_form(p, gb.generators, gb.order).is_zero());
  }
}

TEST(Buchberger, CriteriaSkipPairsWithoutChangingTheResult) {
  const std::vector<Polynomial> g{xyz("x^2 - y"), xyz("y^2 - z"), xyz("z^2 - x")};
  BuchbergerStats stats;
  const GroebnerBasis gb = buchberger(g, MonomialOrder::grevlex(), {}, &stats);
  EXPECT_GT(stats.product_criterion + stats.chain_criterion, 0u);
  EXPECT_TRUE(is_groebner_basis(gb.generators, gb.order));
}

TEST(Buchberger, DeadlineInThePastTimesOut) {
  const CoordinateScheme& s = coordinate_scheme(SchemeKind::r_scheme);
  BuchbergerOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(buchberger(s.generators, MonomialOrder::lex(), opts), GroebnerTimeout);
}

// -------------------------------------------------------------- elimination

TEST(Elimination, Parabola) {
  const VarSet v{"t", "x", "y"};
  const std::vector<Polynomial> g{parse_polynomial("x - t", v), parse_polynomial("y - t^2", v)};
  const std::vector<std::string> drop{"t"};
  for (EliminationOrder kind : {EliminationOrder::block, EliminationOrder::lex}) {
    const auto elim = elimination_ideal(g, drop, kind);
    ASSERT_EQ(elim.size(), 1u);
    EXPECT_EQ(elim[0], parse_polynomial("x^2 - y", v));  // monic
  }
}

TEST(Elimination, ParabolaRelationHoldsOnSamples) {
  const VarSet v{"t", "x", "y"};
  const std::vector<Polynomial> g{parse_polynomial("x - t", v), parse_polynomial("y - t^2", v)};
  const std::vector<std::string> drop{"t"};
  const auto elim = elimination_ideal(g, drop);
  std::mt19937_64 rng(61);
  for (int i = 0; i < 1000; ++i) {
    const Rational t = small_rational(rng, 50, 20);
    const std::vector<Rational> pt{t, t, t * t};
    for (const auto& p : elim) ASSERT_EQ(p.evaluate(pt), 0);
  }
}

TEST(Elimination, CircleDiagonalDropX) {
  const std::vector<Polynomial> g{xy("x^2+y^2-1"), xy("x-y")};
  const std::vector<std::string> drop{"x"};
  const auto elim = elimination_ideal(g, drop);
  ASSERT_EQ(elim.size(), 1u);
  EXPECT_EQ(elim[0], xy("y^2-1/2"));
}

TEST(Elimination, DropsVariablesListedLast) {
  // The dropped variable need not come first in the ring.
  const VarSet v{"x", "y", "t"};
  const std::vector<Polynomial> g{parse_polynomial("x - t^2", v), parse_polynomial("y - t^3", v)};
  const std::vector<std::string> drop{"t"};
  const auto elim = elimination_ideal(g, drop);
  ASSERT_EQ(elim.size(), 1u);
  EXPECT_EQ(elim[0].primitive(MonomialOrder::grevlex()), parse_polynomial("x^3 - y^2", v).primitive(MonomialOrder::grevlex()));
}

// --------------------------------------------------------------- membership

TEST(Membership, IdealTextbook) {
  const std::vector<Polynomial> pm{xy("x-1"), xy("x+1")}, sq{xy("x^2")};
  EXPECT_TRUE(ideal_membership(xy("x^2-1"), pm, MonomialOrder::grevlex()));
  EXPECT_FALSE(ideal_membership(xy("x"), sq, MonomialOrder::grevlex()));
}

TEST(Membership, RandomCombinationsAreMembers) {
  std::mt19937_64 rng(71);
  const std::vector<Polynomial> g{xyz("x^2 - y z"), xyz("y^2 - x + z")};
  for (int i = 0; i < 20; ++i) {
    const Polynomial f = random_poly(rng, kXYZ, 3, 2) * g[0] + random_poly(rng, kXYZ, 3, 2) * g[1];
    EXPECT_TRUE(ideal_membership(f, g, MonomialOrder::grevlex()));
    EXPECT_FALSE(ideal_membership(f + xyz("1"), g, MonomialOrder::grevlex()));
  }
}

TEST(Membership, IdentityTwoIsInTheZeroIdeal) {
  const std::vector<Polynomial> zero{Polynomial(distance_vars())};
  EXPECT_TRUE(ideal_membership(identity_expression(IdentityId::I2), zero, MonomialOrder::grevlex()));
}

TEST(Membership, RadicalTextbook) {
  const std::vector<Polynomial> sq{xy("x^2")}, x{xy("x")};
  EXPECT_TRUE(radical_membership(xy("x"), sq));
  EXPECT_FALSE(ideal_membership(xy("x"), sq, MonomialOrder::grevlex()));
  EXPECT_FALSE(radical_membership(xy("y"), x));
}

TEST(Membership, RadicalMembersVanishOnVarietyPoints) {
  // Twisted cubic: z^2 - y^3 is in the radical; check at parametrized points.
  const std::vector<Polynomial> g{xyz("y - x^2"), xyz("z - x^3")};
  const Polynomial f = xyz("z^2 - y^3"), not_f = xyz("z - y");
  ASSERT_TRUE(radical_membership(f, g));
  EXPECT_FALSE(radical_membership(not_f, g));
  std::mt19937_64 rng(72);
  for (int i = 0; i < 100; ++i) {
    const Rational t = small_rational(rng, 20, 7);
    const std::vector<Rational> pt{t, t * t, t * t * t};
    for (const auto& p : g) ASSERT_EQ(p.evaluate(pt), 0);
    EXPECT_EQ(f.evaluate(pt), 0);
  }
}

TEST(Membership, CocircularityInRadicalOfPtolemyIdeal) {
  const CoordinateScheme& s = coordinate_scheme(SchemeKind::ptolemy);
  std::vector<Polynomial> gens = s.generators;
  gens.push_back(s.condition(ConditionId::P));
  EXPECT_TRUE(radical_membership(s.cocircularity(), gens));
}

}  // namespace
}  // namespace quadcert
