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

#include "quadcert/geometry.hpp"

#include <stdexcept>
#include <utility>

#include "quadcert/determinant.hpp"

namespace quadcert {

char vertex_name(Vertex v) { return "ABCD"[static_cast<int>(v)]; }

Vertex parse_vertex(char name) {
  if (name < 'A' || name > 'D') throw std::invalid_argument(std::string("unknown vertex '") + name + "'");
  return static_cast<Vertex>(name - 'A');
}

Rational squared_distance(const Point& p, const Point& q) {
  const Rational dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

QuadConfig::QuadConfig(Point a, Point b, Point c, Point d) : points_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const auto& p = points_;
  dist_ = {squared_distance(p[0], p[1]), squared_distance(p[1], p[2]), squared_distance(p[2], p[3]),
           squared_distance(p[3], p[0]), squared_distance(p[0], p[2]), squared_distance(p[1], p[3])};
}

bool QuadConfig::has_coincident_points() const {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (points_[i] == points_[j]) return true;
  return false;
}

QuadConfig QuadConfig::with_point(Vertex v, const Point& p) const {
  auto pts = points_;
  pts[static_cast<int>(v)] = p;
  return QuadConfig(pts[0], pts[1], pts[2], pts[3]);
}

// ------------------------------------------------------------------ areas

Rational signed_area(const Point& p, const Point& q, const Point& r) {
  return determinant<Rational>({{p.x, p.y, Rational(1)}, {q.x, q.y, Rational(1)}, {r.x, r.y, Rational(1)}});
}

SignedAreas signed_areas(const QuadConfig& cfg) {
  return {signed_area(cfg.A(), cfg.B(), cfg.C()), signed_area(cfg.A(), cfg.B(), cfg.D()),
          signed_area(cfg.B(), cfg.C(), cfg.D()), signed_area(cfg.A(), cfg.C(), cfg.D())};
}

Rational hull_product_n(const SignedAreas& s) { return s.abc * s.acd; }
Rational hull_product_m(const SignedAreas& s) { return s.abd * s.bcd; }

// ------------------------------------------------------------ hull table

std::string HullClass::describe() const {
  switch (kind) {
    case Kind::convex4: return "ConvexHull4(" + vertices + ")";
    case Kind::concave3: return "ConcaveHull3(" + vertices + "," + std::string(1, interior) + ")";
    case Kind::collinear4: return "Collinear4";
    case Kind::collinear3: return "Collinear3(" + vertices + ")";
  }
  return {};
}

HullClass classify_signs(int abc, int abd, int bcd, int acd) {
  using K = HullClass::Kind;
  if (abc == 0 && abd == 0 && bcd == 0 && acd == 0) return {K::collinear4, "ABCD"};
  const int zeros = (abc == 0) + (abd == 0) + (bcd == 0) + (acd == 0);
  if (zeros > 1) throw std::logic_error("two collinear triples without full collinearity");
  if (abc == 0) return {K::collinear3, "ABC"};
  if (abd == 0) return {K::collinear3, "ABD"};
  if (bcd == 0) return {K::collinear3, "BCD"};
  if (acd == 0) return {K::collinear3, "ACD"};

  // Rows keyed by the signs of (ABD, BCD, ACD) once ABC is positive; a
  // negative ABC mirrors the configuration, which flips every sign and
  // reverses each counterclockwise listing.
  struct Row {
    int abd, bcd, acd;
    HullClass hull;
  };
  static const Row positive[] = {
      {+1, +1, +1, {K::convex4, "ABCD"}},      {+1, -1, -1, {K::convex4, "ABDC"}},
      {-1, +1, -1, {K::convex4, "ADBC"}},      {+1, +1, -1, {K::concave3, "ABC", 'D'}},
      {+1, -1, +1, {K::concave3, "ABD", 'C'}}, {-1, +1, +1, {K::concave3, "BCD", 'A'}},
      {-1, -1, -1, {K::concave3, "CAD", 'B'}},
  };
  static const Row negative[] = {
      {-1, -1, -1, {K::convex4, "ADCB"}},      {-1, +1, +1, {K::convex4, "ACDB"}},
      {+1, -1, +1, {K::convex4, "ACBD"}},      {-1, -1, +1, {K::concave3, "ACB", 'D'}},
      {-1, +1, -1, {K::concave3, "ADB", 'C'}}, {+1, -1, -1, {K::concave3, "BDC", 'A'}},
      {+1, +1, +1, {K::concave3, "CDA", 'B'}},
  };
  for (const Row& row : abc > 0 ? positive : negative)
    if (row.abd == abd && row.bcd == bcd && row.acd == acd) return row.hull;
  throw std::logic_error("sign pattern marked not realizable");
}

HullClass classify_hull(const QuadConfig& cfg) {
  if (cfg.has_coincident_points()) throw std::invalid_argument("coincident points");
  const SignedAreas s = signed_areas(cfg);
  return classify_signs(sgn(s.abc), sgn(s.abd), sgn(s.bcd), sgn(s.acd));
}

// ----------------------------------------------------------- determinants

Rational cayley_menger(const DistSextuple& d) {
  const Rational o(0), l(1);
  return determinant<Rational>({{o, l, l, l, l},
                                {l, o, d.qa, d.qe, d.qd},
                                {l, d.qa, o, d.qb, d.qf},
                                {l, d.qe, d.qb, o, d.qc},
                                {l, d.qd, d.qf, d.qc, o}});
}

Rational cocircularity(const QuadConfig& cfg) {
  Matrix<Rational> m;
  for (const Point& p : cfg.points()) m.push_back({p.x * p.x + p.y * p.y, p.x, p.y, Rational(1)});
  return determinant(m);
}

MidpointDistances midpoint_distances(const DistSextuple& d) {
  MidpointDistances out{(d.qa + d.qb + d.qc + d.qd - d.qe - d.qf) / 4, (-d.qa + d.qb - d.qc + d.qd + d.qe + d.qf) / 4,
                        (d.qa - d.qb + d.qc - d.qd + d.qe + d.qf) / 4};
  if (out.v1_sq < 0 || out.v2_sq < 0 || out.v3_sq < 0)
    throw std::domain_error("negative midpoint form: sextuple not realizable in R^3");
  return out;
}

Point midpoint(const Point& p, const Point& q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

// ------------------------------------------------------------- reflection

Point reflect_point(const Point& p, const Point& l1, const Point& l2) {
  const Rational dx = l2.x - l1.x, dy = l2.y - l1.y;
  const Rational len = dx * dx + dy * dy;
  if (len == 0) throw std::invalid_argument("reflection line endpoints coincide");
  const Rational px = p.x - l1.x, py = p.y - l1.y;
  const Rational k = 2 * (px * dx + py * dy) / len;
  return {l1.x + k * dx - px, l1.y + k * dy - py};
}

QuadConfig reflect_over_line(const QuadConfig& cfg, Vertex moved, Vertex l1, Vertex l2) {
  if (l1 == l2) throw std::invalid_argument("reflection line needs two distinct vertices");
  return cfg.with_point(moved, reflect_point(cfg[moved], cfg[l1], cfg[l2]));
}

}  // namespace quadcert
