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

#ifndef QUADCERT_IO_HPP
#define QUADCERT_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "quadcert/geometry.hpp"

namespace quadcert {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; integers are also accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// {"A": ["x", "y"], "B": ..., "C": ..., "D": ...}
Json config_to_json(const QuadConfig& cfg);
QuadConfig config_from_json(const Json& j);

// {"qa": "...", ..., "qf": "..."}
Json sextuple_to_json(const DistSextuple& d);
DistSextuple sextuple_from_json(const Json& j);

bool looks_like_config(const Json& j);

/// Standalone SVG of the four points with labels, the boundary in ABCD
/// order and both diagonals dashed.
std::string render_svg(const QuadConfig& cfg, int size_px = 480);

}  // namespace quadcert

#endif  // QUADCERT_IO_HPP
