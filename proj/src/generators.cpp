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

#include "quadcert/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "quadcert/conditions.hpp"

namespace quadcert {

namespace {

Rational random_rational(Rng& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

bool non_degenerate(const QuadConfig& cfg) {
  if (cfg.has_coincident_points()) return false;
  const SignedAreas s = signed_areas(cfg);
  return s.abc != 0 && s.abd != 0 && s.bcd != 0 && s.acd != 0;
}

constexpr int kMaxAttempts = 100000;

[[noreturn]] void give_up(const char* family) {
  throw std::runtime_error(std::string("generator '") + family + "' found no admissible instance");
}

}  // namespace

Point circle_point(const Rational& t) {
  const Rational den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

QuadConfig cyclic_from_parameters(const std::array<Rational, 4>& t, std::string_view order, const Rational& radius,
                                  const Point& center) {
  std::string sorted_order(order);
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != "ABCD") throw std::invalid_argument("order must be a permutation of ABCD");
  std::array<Rational, 4> params = t;
  std::sort(params.begin(), params.end());
  if (std::adjacent_find(params.begin(), params.end()) != params.end())
    throw std::invalid_argument("circle parameters must be distinct");
  // The half-angle map is increasing in angle on (-pi, pi), so ascending
  // parameters walk the circle counterclockwise.
  std::array<Point, 4> labelled;
  for (int i = 0; i < 4; ++i) {
    const Point p = circle_point(params[i]);
    labelled[order[i] - 'A'] = {center.x + radius * p.x, center.y + radius * p.y};
  }
  return QuadConfig(labelled[0], labelled[1], labelled[2], labelled[3]);
}

QuadConfig gen_cyclic(Rng& rng, std::string_view order) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::array<Rational, 4> t;
    for (auto& x : t) x = random_rational(rng, -15, 15, 7);
    std::array<Rational, 4> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    const Rational radius(std::uniform_int_distribution<int>(1, 6)(rng));
    const Point center{random_rational(rng, -5, 5, 2), random_rational(rng, -5, 5, 2)};
    return cyclic_from_parameters(t, order, radius, center);
  }
  give_up("cyclic");
}

QuadConfig gen_cyclic(std::uint64_t seed, std::string_view order) {
  Rng rng(seed);
  return gen_cyclic(rng, order);
}

QuadConfig gen_folded(Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const QuadConfig folded = reflect_over_line(gen_cyclic(rng, "ABCD"), Vertex::D, Vertex::A, Vertex::C);
    if (non_degenerate(folded)) return folded;
  }
  give_up("folded");
}

QuadConfig gen_folded(std::uint64_t seed) {
  Rng rng(seed);
  return gen_folded(rng);
}

QuadConfig gen_reflected(Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const QuadConfig reflected = reflect_over_line(gen_cyclic(rng, "ACBD"), Vertex::C, Vertex::B, Vertex::D);
    if (non_degenerate(reflected)) return reflected;
  }
  give_up("reflected");
}

QuadConfig gen_reflected(std::uint64_t seed) {
  Rng rng(seed);
  return gen_reflected(rng);
}

QuadConfig gen_tilted_kite(Rng& rng, bool convex) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Rotation by the common angle: (cos, sin) of a half-angle parameter > 0.
    const Point rot = circle_point(random_rational(rng, 1, 12, 6));
    const Point u1 = circle_point(random_rational(rng, -12, 12, 6));
    const Point u2{rot.x * u1.x - rot.y * u1.y, rot.y * u1.x + rot.x * u1.y};
    const Point dir = circle_point(random_rational(rng, -12, 12, 6));
    // dir rotated by the inverse rotation.
    const Point back{rot.x * dir.x + rot.y * dir.y, -rot.y * dir.x + rot.x * dir.y};
    const Rational s1 = random_rational(rng, 1, 30, 4), s2 = random_rational(rng, 1, 30, 4);

    const Point a{random_rational(rng, -4, 4, 2), random_rational(rng, -4, 4, 2)};
    const Point b{a.x + s1 * u1.x, a.y + s1 * u1.y};
    const Point d{a.x + s2 * u2.x, a.y + s2 * u2.y};
    // C = B - lambda*dir and D = C + mu*back, so B - D = lambda*dir - mu*back.
    const Rational rx = b.x - d.x, ry = b.y - d.y;
    const Rational det = -dir.x * back.y + dir.y * back.x;
    if (det == 0) continue;
    const Rational lambda = (-rx * back.y + ry * back.x) / det;
    const Rational mu = (dir.x * ry - dir.y * rx) / det;
    if (lambda <= 0 || mu <= 0) continue;
    const Point c{b.x - lambda * dir.x, b.y - lambda * dir.y};

    // A coin flip mirrors the picture so both orientations occur.
    const bool mirror = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    auto place = [&](const Point& p) { return mirror ? Point{-p.x, p.y} : p; };
    const QuadConfig cfg(place(a), place(b), place(c), place(d));
    if (!non_degenerate(cfg)) continue;
    const HullClass hull = classify_hull(cfg);
    if ((hull.kind == HullClass::Kind::convex4) != convex) continue;
    const DistSextuple& q = cfg.distances();
    if (!eval_condition(ConditionId::K_T, q).is_zero() || !eval_condition(ConditionId::R_T, q).is_zero()) continue;
    return cfg;
  }
  give_up("tilted_kite");
}

QuadConfig gen_tilted_kite(std::uint64_t seed, bool convex) {
  Rng rng(seed);
  return gen_tilted_kite(rng, convex);
}

QuadConfig gen_random(Rng& rng, int coordinate_range, int max_denominator) {
  std::array<Point, 4> p;
  for (auto& pt : p)
    pt = {random_rational(rng, -coordinate_range, coordinate_range, max_denominator),
          random_rational(rng, -coordinate_range, coordinate_range, max_denominator)};
  return QuadConfig(p[0], p[1], p[2], p[3]);
}

}  // namespace quadcert
