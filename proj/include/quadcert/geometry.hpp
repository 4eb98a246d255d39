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

#ifndef QUADCERT_GEOMETRY_HPP
#define QUADCERT_GEOMETRY_HPP

#include <array>
#include <string>

#include "quadcert/rational.hpp"

namespace quadcert {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Vertex { A = 0, B = 1, C = 2, D = 3 };
char vertex_name(Vertex v);
Vertex parse_vertex(char name);  // throws std::invalid_argument

Rational squared_distance(const Point& p, const Point& q);

// Six squared distances; no realizability is implied.
//   qa=|AB|^2 qb=|BC|^2 qc=|CD|^2 qd=|DA|^2 qe=|AC|^2 qf=|BD|^2
struct DistSextuple {
  Rational qa, qb, qc, qd, qe, qf;
  friend bool operator==(const DistSextuple&, const DistSextuple&) = default;
};

/// Four labelled rational points with their squared distances.
class QuadConfig {
 public:
  QuadConfig(Point a, Point b, Point c, Point d);

  const Point& operator[](Vertex v) const { return points_[static_cast<int>(v)]; }
  const Point& A() const { return points_[0]; }
  const Point& B() const { return points_[1]; }
  const Point& C() const { return points_[2]; }
  const Point& D() const { return points_[3]; }
  const std::array<Point, 4>& points() const { return points_; }
  const DistSextuple& distances() const { return dist_; }

  bool has_coincident_points() const;
  QuadConfig with_point(Vertex v, const Point& p) const;

  friend bool operator==(const QuadConfig& l, const QuadConfig& r) { return l.points_ == r.points_; }

 private:
  std::array<Point, 4> points_;
  DistSextuple dist_;
};

// Twice the signed area of (p, q, r); positive when counterclockwise.
Rational signed_area(const Point& p, const Point& q, const Point& r);

struct SignedAreas {
  Rational abc, abd, bcd, acd;
};
SignedAreas signed_areas(const QuadConfig& cfg);

/// Outcome of the four-point sign table.
///
/// convex4:    vertices holds the counterclockwise boundary order ("ABDC").
/// concave3:   vertices holds the hull triangle counterclockwise, interior
///             holds the enclosed vertex.
/// collinear3: exactly one triple is collinear; vertices names it.
/// collinear4: all four points on a line.
struct HullClass {
  enum class Kind { convex4, concave3, collinear4, collinear3 };
  Kind kind;
  std::string vertices;
  char interior = 0;

  std::string describe() const;  // e.g. "ConvexHull4(ABCD)", "ConcaveHull3(ABC,D)"
  friend bool operator==(const HullClass&, const HullClass&) = default;
};

/// Reads the hull off the signs of the four triangle areas. Throws
/// std::invalid_argument on coincident points and std::logic_error on the
/// two sign patterns no planar configuration can produce.
HullClass classify_hull(const QuadConfig& cfg);
HullClass classify_signs(int abc, int abd, int bcd, int acd);

// Both N = abc*acd and M = abd*bcd.
Rational hull_product_n(const SignedAreas& s);
Rational hull_product_m(const SignedAreas& s);

/// 5x5 bordered distance determinant; 288 V^2 for a tetrahedron.
Rational cayley_menger(const DistSextuple& d);

/// 4x4 determinant with rows (x^2 + y^2, x, y, 1), zero exactly when the
/// points are concyclic or collinear.
Rational cocircularity(const QuadConfig& cfg);

/// Squared distances between the midpoints of the three pairs of
/// opposite edges: (AC, BD), (AB, CD), (BC, AD). Throws
/// std::domain_error if any comes out negative.
struct MidpointDistances {
  Rational v1_sq, v2_sq, v3_sq;
};
MidpointDistances midpoint_distances(const DistSextuple& d);

Point midpoint(const Point& p, const Point& q);

/// Mirror image of p in the line through l1 and l2.
Point reflect_point(const Point& p, const Point& l1, const Point& l2);

/// Moves one vertex to its mirror image in the line through two others.
/// Throws std::invalid_argument when the line endpoints coincide.
QuadConfig reflect_over_line(const QuadConfig& cfg, Vertex moved, Vertex l1, Vertex l2);

}  // namespace quadcert

#endif  // QUADCERT_GEOMETRY_HPP
