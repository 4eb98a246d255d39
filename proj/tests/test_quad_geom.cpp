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

#include <array>
#include <random>
#include <set>

#include "quadcert/conditions.hpp"
#include "quadcert/generators.hpp"
#include "quadcert/geometry.hpp"
#include "quadcert/io.hpp"
#include "support.hpp"

namespace quadcert {
namespace {

using testing::cross;
using testing::random_config;
using testing::small_rational;

Point P(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }
QuadConfig quad(Point a, Point b, Point c, Point d) { return QuadConfig(a, b, c, d); }

const QuadConfig kSquare = quad(P("0", "0"), P("1", "0"), P("1", "1"), P("0", "1"));
const QuadConfig kDart = quad(P("0", "0"), P("2", "0"), P("1", "2"), P("1", "1/2"));

DistSextuple all_equal(long q) { return {q, q, q, q, q, q}; }

QuadConfig transform(const QuadConfig& cfg, const Point& rot, const Rational& scale, const Point& shift) {
  std::array<Point, 4> out;
  for (int i = 0; i < 4; ++i) {
    const Point& p = cfg.points()[i];
    out[i] = {scale * (rot.x * p.x - rot.y * p.y) + shift.x, scale * (rot.y * p.x + rot.x * p.y) + shift.y};
  }
  return QuadConfig(out[0], out[1], out[2], out[3]);
}

// ------------------------------------------------------------ signed areas

TEST(SignedAreasTest, SpecExamples) {
  const SignedAreas s = signed_areas(kSquare);
  EXPECT_EQ(s.abc, 1);
  EXPECT_EQ(s.abd, 1);
  EXPECT_EQ(s.bcd, 1);
  EXPECT_EQ(s.acd, 1);
  EXPECT_EQ(signed_areas(quad(P("0", "0"), P("1", "0"), P("2", "0"), P("5", "7"))).abc, 0);
  EXPECT_EQ(signed_areas(kDart).acd, Rational(-3, 2));
}

TEST(SignedAreasTest, CofactorIdentityAndCrossProductOracle) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const QuadConfig cfg = random_config(rng);
    const SignedAreas s = signed_areas(cfg);
    EXPECT_EQ(s.abc - s.abd + s.acd - s.bcd, 0);
    EXPECT_EQ(s.abc, cross(cfg.A(), cfg.B(), cfg.C()));
    EXPECT_EQ(s.bcd, cross(cfg.B(), cfg.C(), cfg.D()));
    EXPECT_EQ(hull_product_n(s), s.abc * s.acd);
    EXPECT_EQ(hull_product_m(s), s.abd * s.bcd);
  }
}

// -------------------------------------------------------------------- hulls

TEST(ClassifyHull, SpecExamples) {
  EXPECT_EQ(classify_hull(kSquare).describe(), "ConvexHull4(ABCD)");
  const HullClass dart = classify_hull(kDart);
  EXPECT_EQ(dart.kind, HullClass::Kind::concave3);
  EXPECT_EQ(dart.vertices, "ABC");
  EXPECT_EQ(dart.interior, 'D');
  EXPECT_EQ(classify_hull(quad(P("0", "0"), P("1", "0"), P("2", "0"), P("3", "0"))).kind, HullClass::Kind::collinear4);
}

TEST(ClassifyHull, CollinearTripleIsNamed) {
  const HullClass h = classify_hull(quad(P("0", "0"), P("1", "5"), P("2", "0"), P("1", "0")));
  EXPECT_EQ(h.kind, HullClass::Kind::collinear3);
  EXPECT_EQ(h.vertices, "ACD");
}

TEST(ClassifyHull, CoincidentPointsRejected) {
  EXPECT_THROW(classify_hull(quad(P("0", "0"), P("0", "0"), P("1", "0"), P("0", "1"))), std::invalid_argument);
}

TEST(ClassifySigns, FullTables) {
  struct Row { int abc, abd, bcd, acd; const char* text; };
  const Row rows[] = {
      {1, 1, 1, 1, "ConvexHull4(ABCD)"},     {1, 1, -1, -1, "ConvexHull4(ABDC)"},   {1, -1, 1, -1, "ConvexHull4(ADBC)"},
      {1, 1, 1, -1, "ConcaveHull3(ABC,D)"},  {1, 1, -1, 1, "ConcaveHull3(ABD,C)"},  {1, -1, 1, 1, "ConcaveHull3(BCD,A)"},
      {1, -1, -1, -1, "ConcaveHull3(CAD,B)"}, {-1, -1, -1, -1, "ConvexHull4(ADCB)"}, {-1, -1, 1, 1, "ConvexHull4(ACDB)"},
      {-1, 1, -1, 1, "ConvexHull4(ACBD)"},   {-1, -1, -1, 1, "ConcaveHull3(ACB,D)"}, {-1, -1, 1, -1, "ConcaveHull3(ADB,C)"},
      {-1, 1, -1, -1, "ConcaveHull3(BDC,A)"}, {-1, 1, 1, 1, "ConcaveHull3(CDA,B)"},
  };
  for (const Row& r : rows) EXPECT_EQ(classify_signs(r.abc, r.abd, r.bcd, r.acd).describe(), r.text);
  EXPECT_THROW(classify_signs(1, -1, -1, 1), std::logic_error);
  EXPECT_THROW(classify_signs(-1, 1, 1, -1), std::logic_error);
}

TEST(ClassifyHull, InvariantUnderRationalRigidMotionAndScaling) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const QuadConfig cfg = random_config(rng);
    const Point rot = circle_point(small_rational(rng));
    Rational scale = small_rational(rng, 9, 4);
    if (scale <= 0) scale = Rational(3, 2);
    const QuadConfig moved = transform(cfg, rot, scale, testing::random_point(rng));
    EXPECT_EQ(classify_hull(moved), classify_hull(cfg));
  }
}

TEST(ClassifyHull, ConvexImpliesMatchingSignProducts) {
  std::mt19937_64 rng(3);
  int convex = 0;
  for (int i = 0; i < 2000; ++i) {
    const QuadConfig cfg = random_config(rng);
    if (classify_hull(cfg).kind != HullClass::Kind::convex4) continue;
    ++convex;
    const SignedAreas s = signed_areas(cfg);
    const int n = sgn(hull_product_n(s)), m = sgn(hull_product_m(s));
    EXPECT_TRUE((n >= 0 && m >= 0) || (n <= 0 && m <= 0));
  }
  EXPECT_GT(convex, 100);
}

// ------------------------------------------------------- Cayley-Menger, circle

TEST(CayleyMenger, PlanarIsZero) {
  std::mt19937_64 rng(4);
  EXPECT_EQ(cayley_menger(kSquare.distances()), 0);
  for (int i = 0; i < 300; ++i) EXPECT_EQ(cayley_menger(random_config(rng).distances()), 0);
}

TEST(CayleyMenger, RegularTetrahedra) {
  EXPECT_EQ(cayley_menger(all_equal(1)), 4);
  EXPECT_EQ(cayley_menger(all_equal(4)), 256);
  // 288 V^2 with V = 1/(6 sqrt 2) for unit edges.
  EXPECT_EQ(Rational(288) * Rational(1, 72), 4);
}

TEST(Cocircularity, SpecExamples) {
  EXPECT_EQ(cocircularity(kSquare), 0);
  EXPECT_EQ(cocircularity(quad(P("0", "0"), P("1", "0"), P("3", "0"), P("7", "0"))), 0);
  EXPECT_NE(cocircularity(quad(P("0", "0"), P("1", "0"), P("0", "1"), P("2", "2"))), 0);
}

// -------------------------------------------------------- midpoint distances

Rational coordinate_midpoint_sq(const Point& p, const Point& q, const Point& r, const Point& s) {
  const Rational dx = (p.x + q.x - r.x - s.x) / 2, dy = (p.y + q.y - r.y - s.y) / 2;
  return dx * dx + dy * dy;
}

TEST(MidpointDistancesTest, UnitSquare) {
  const MidpointDistances m = midpoint_distances(kSquare.distances());
  EXPECT_EQ(m.v1_sq, 0);
  EXPECT_EQ(m.v2_sq, 1);
  EXPECT_EQ(m.v3_sq, 1);
}

TEST(MidpointDistancesTest, RegularTetrahedronCoordinateModel) {
  // Vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1): every edge^2 = 8.
  const std::array<std::array<int, 3>, 4> v{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  auto mid_sq = [&](int i, int j, int k, int l) {
    Rational s = 0;
    for (int c = 0; c < 3; ++c) {
      const Rational diff = Rational(v[i][c] + v[j][c] - v[k][c] - v[l][c]) / 2;
      s += diff * diff;
    }
    return s;
  };
  const MidpointDistances m = midpoint_distances(all_equal(8));
  EXPECT_EQ(m.v1_sq, mid_sq(0, 2, 1, 3));
  EXPECT_EQ(m.v2_sq, mid_sq(0, 1, 2, 3));
  EXPECT_EQ(m.v3_sq, mid_sq(1, 2, 0, 3));
  EXPECT_EQ(midpoint_distances(all_equal(1)).v1_sq, Rational(1, 2));
}

TEST(MidpointDistancesTest, AgreesWithCoordinatesOnRandomConfigs) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const QuadConfig c = random_config(rng);
    const MidpointDistances m = midpoint_distances(c.distances());
    EXPECT_EQ(m.v1_sq, coordinate_midpoint_sq(c.A(), c.C(), c.B(), c.D()));
    EXPECT_EQ(m.v2_sq, coordinate_midpoint_sq(c.A(), c.B(), c.C(), c.D()));
    EXPECT_EQ(m.v3_sq, coordinate_midpoint_sq(c.B(), c.C(), c.A(), c.D()));
  }
}

TEST(MidpointDistancesTest, UnrealizableSextupleThrows) {
  EXPECT_THROW(midpoint_distances({1, 1, 1, 1, 9, 9}), std::domain_error);
}

// ----------------------------------------------------------------- reflection

TEST(Reflection, FoldedRectangle) {
  const QuadConfig rect = quad(P("0", "0"), P("4", "0"), P("4", "3"), P("0", "3"));
  const QuadConfig folded = reflect_over_line(rect, Vertex::D, Vertex::A, Vertex::C);
  EXPECT_EQ(folded.D(), P("72/25", "-21/25"));
  EXPECT_EQ(squared_distance(folded.D(), folded.A()), 9);
  EXPECT_EQ(squared_distance(folded.D(), folded.C()), 16);
}

TEST(Reflection, InvolutionFixedPointsAndErrors) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const QuadConfig cfg = random_config(rng);
    const QuadConfig once = reflect_over_line(cfg, Vertex::C, Vertex::B, Vertex::D);
    EXPECT_EQ(reflect_over_line(once, Vertex::C, Vertex::B, Vertex::D), cfg);
    EXPECT_EQ(squared_distance(once.C(), once.B()), squared_distance(cfg.C(), cfg.B()));
    EXPECT_EQ(squared_distance(once.C(), once.D()), squared_distance(cfg.C(), cfg.D()));
  }
  const Point on_line = reflect_point(P("2", "2"), P("0", "0"), P("1", "1"));
  EXPECT_EQ(on_line, P("2", "2"));
  EXPECT_THROW(reflect_point(P("1", "0"), P("0", "0"), P("0", "0")), std::invalid_argument);
  EXPECT_THROW(reflect_over_line(kSquare, Vertex::A, Vertex::B, Vertex::B), std::invalid_argument);
}

// ----------------------------------------------------------------- generators

TEST(Generators, CyclicFromParametersOnUnitCircle) {
  const std::array<Rational, 4> t{0, 1, 3, -2};
  const QuadConfig cfg = cyclic_from_parameters(t, "ABCD");
  std::set<std::pair<std::string, std::string>> seen;
  for (const Point& p : cfg.points()) {
    EXPECT_EQ(p.x * p.x + p.y * p.y, 1);
    seen.insert({to_string(p.x), to_string(p.y)});
  }
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_EQ(classify_hull(cfg).describe(), "ConvexHull4(ABCD)");
  EXPECT_THROW(cyclic_from_parameters({0, 1, 1, 2}, "ABCD"), std::invalid_argument);
  EXPECT_THROW(cyclic_from_parameters(t, "ABCC"), std::invalid_argument);
}

TEST(Generators, CyclicSamplesAreConcyclicConvexAndPtolemic) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const QuadConfig cfg = gen_cyclic(seed, seed % 2 ? "ADCB" : "ABCD");
    EXPECT_EQ(cocircularity(cfg), 0);
    EXPECT_EQ(classify_hull(cfg).kind, HullClass::Kind::convex4);
    EXPECT_TRUE(eval_condition(ConditionId::P, cfg.distances()).is_zero());
  }
}

TEST(Generators, CyclicRespectsRequestedOrder) {
  for (const char* order : {"ACBD", "ABDC", "ACDB"}) {
    const QuadConfig cfg = gen_cyclic(std::uint64_t{9}, order);
    EXPECT_EQ(classify_hull(cfg).vertices, order);
  }
}

TEST(Generators, TiltedKitesHaveEqualAngles) {
  const std::set<std::string> convex{"ABCD", "ADCB"}, concave{"ABC", "CAD", "ACB", "CDA"};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    for (bool is_convex : {true, false}) {
      const QuadConfig cfg = gen_tilted_kite(seed, is_convex);
      const DistSextuple& d = cfg.distances();
      EXPECT_TRUE(eval_condition(ConditionId::K_T, d).is_zero());
      EXPECT_TRUE(eval_condition(ConditionId::R_T, d).is_zero());
      EXPECT_TRUE(equal_angle_witness(d));
      const HullClass h = classify_hull(cfg);
      if (is_convex) {
        EXPECT_EQ(h.kind, HullClass::Kind::convex4);
        EXPECT_TRUE(convex.count(h.vertices)) << h.describe();
      } else {
        EXPECT_EQ(h.kind, HullClass::Kind::concave3);
        EXPECT_TRUE(concave.count(h.vertices)) << h.describe();
      }
    }
  }
}

TEST(Generators, SymmetricKiteSatisfiesTiltedKiteConditions) {
  const QuadConfig kite = quad(P("0", "0"), P("1", "1"), P("2", "0"), P("1", "-3"));
  EXPECT_TRUE(eval_condition(ConditionId::K_T, kite.distances()).is_zero());
  EXPECT_TRUE(eval_condition(ConditionId::K_T, kSquare.distances()).is_zero());
}

TEST(Generators, FoldedAndReflectedFamilies) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const QuadConfig folded = gen_folded(seed), reflected = gen_reflected(seed);
    EXPECT_TRUE(eval_condition(ConditionId::R, folded.distances()).is_zero());
    EXPECT_TRUE(supplementary_witness(folded.distances()));
    EXPECT_TRUE(eval_condition(ConditionId::R_T, reflected.distances()).is_zero());
    EXPECT_FALSE(folded.has_coincident_points());
  }
}

TEST(Generators, SeedsAreReproducible) {
  EXPECT_EQ(gen_cyclic(std::uint64_t{42}, "ABCD"), gen_cyclic(std::uint64_t{42}, "ABCD"));
  EXPECT_EQ(gen_tilted_kite(std::uint64_t{42}, false), gen_tilted_kite(std::uint64_t{42}, false));
  EXPECT_NE(gen_folded(std::uint64_t{1}), gen_folded(std::uint64_t{2}));
}

// ------------------------------------------------------------------------ I/O

TEST(Io, ConfigRoundTrip) {
  const Json j = config_to_json(kDart);
  EXPECT_EQ(j["D"][1], "1/2");
  EXPECT_EQ(config_from_json(j), kDart);
  EXPECT_EQ(config_from_json(Json::parse(R"({"A":[0,0],"B":["2",0],"C":[1,2],"D":[1,"1/2"]})")), kDart);
}

TEST(Io, RejectsFloatsAndMissingPoints) {
  EXPECT_THROW(config_from_json(Json::parse(R"({"A":[0.5,0],"B":[1,0],"C":[1,1],"D":[0,1]})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"A":[0,0],"B":[1,0],"C":[1,1]})")), std::invalid_argument);
}

TEST(Io, SextupleRoundTripAndPositivity) {
  const DistSextuple d{9, 16, 9, 16, 25, 25};
  EXPECT_EQ(sextuple_from_json(sextuple_to_json(d)), d);
  EXPECT_THROW(sextuple_from_json(Json::parse(R"({"qa":"0","qb":1,"qc":1,"qd":1,"qe":1,"qf":1})")),
               std::invalid_argument);
}

TEST(Io, SvgHasPolygonAndLabels) {
  const std::string svg = render_svg(kSquare, 200);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
  for (const char* label : {">A<", ">B<", ">C<", ">D<"}) EXPECT_NE(svg.find(label), std::string::npos);
}

}  // namespace
}  // namespace quadcert
