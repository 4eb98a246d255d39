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

#ifndef QUADCERT_GENERATORS_HPP
#define QUADCERT_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "quadcert/geometry.hpp"

namespace quadcert {

using Rng = std::mt19937_64;

// Point of the unit circle at tangent half-angle t.
Point circle_point(const Rational& t);

/// Points at the four (distinct) half-angle parameters, on the circle with
/// the given center and radius, labelled so that the counterclockwise
/// traversal reads `order` (a permutation of "ABCD").
QuadConfig cyclic_from_parameters(const std::array<Rational, 4>& t, std::string_view order,
                                  const Rational& radius = Rational(1), const Point& center = {});

// Random concyclic quadrilateral in counterclockwise order `order`.
QuadConfig gen_cyclic(Rng& rng, std::string_view order);
QuadConfig gen_cyclic(std::uint64_t seed, std::string_view order);

// Cyclic ABCD with D mirrored in AC; R vanishes. Non-degenerate.
QuadConfig gen_folded(Rng& rng);
QuadConfig gen_folded(std::uint64_t seed);

// Cyclic in order ACBD with C mirrored in BD; R_T vanishes. Non-degenerate.
QuadConfig gen_reflected(Rng& rng);
QuadConfig gen_reflected(std::uint64_t seed);

/// Quadrilateral with equal angles BAD and BCD built from rational rays:
/// both angles use the same rational rotation, with opposite orientation at
/// A and C. Retries until the points are distinct, no triple is collinear,
/// K_T = R_T = 0 hold exactly and the hull is convex4 (convex) or concave3.
QuadConfig gen_tilted_kite(Rng& rng, bool convex);
QuadConfig gen_tilted_kite(std::uint64_t seed, bool convex);

// Four points with small random rational coordinates (may be degenerate).
QuadConfig gen_random(Rng& rng, int coordinate_range = 20, int max_denominator = 6);

}  // namespace quadcert

#endif  // QUADCERT_GENERATORS_HPP
