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

#include "quadcert/io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace quadcert {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw std::invalid_argument("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

Json config_to_json(const QuadConfig& cfg) {
  Json out = Json::object();
  for (int i = 0; i < 4; ++i) {
    const Point& p = cfg.points()[i];
    out[std::string(1, "ABCD"[i])] = Json::array({rational_to_json(p.x), rational_to_json(p.y)});
  }
  return out;
}

QuadConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("configuration must be a JSON object");
  std::array<Point, 4> pts;
  for (int i = 0; i < 4; ++i) {
    const std::string key(1, "ABCD"[i]);
    if (!j.contains(key)) throw std::invalid_argument("configuration lacks point " + key);
    const Json& p = j.at(key);
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("point " + key + " must be [x, y]");
    pts[i] = {rational_from_json(p[0]), rational_from_json(p[1])};
  }
  return QuadConfig(pts[0], pts[1], pts[2], pts[3]);
}

Json sextuple_to_json(const DistSextuple& d) {
  return Json{{"qa", rational_to_json(d.qa)}, {"qb", rational_to_json(d.qb)}, {"qc", rational_to_json(d.qc)},
              {"qd", rational_to_json(d.qd)}, {"qe", rational_to_json(d.qe)}, {"qf", rational_to_json(d.qf)}};
}

DistSextuple sextuple_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("sextuple must be a JSON object");
  auto get = [&](const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("sextuple lacks ") + key);
    const Rational q = rational_from_json(j.at(key));
    if (q <= 0) throw std::invalid_argument(std::string(key) + " must be positive");
    return q;
  };
  return {get("qa"), get("qb"), get("qc"), get("qd"), get("qe"), get("qf")};
}

bool looks_like_config(const Json& j) { return j.is_object() && j.contains("A"); }

std::string render_svg(const QuadConfig& cfg, int size_px) {
  std::array<double, 4> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs[i] = cfg.points()[i].x.get_d();
    ys[i] = cfg.points()[i].y.get_d();
  }
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  const double span = std::max({*xmax - *xmin, *ymax - *ymin, 1e-12});
  const double margin = 40.0, scale = (size_px - 2 * margin) / span;
  // SVG's y axis points down; flip so counterclockwise stays counterclockwise.
  auto sx = [&](int i) { return margin + (xs[i] - *xmin) * scale; };
  auto sy = [&](int i) { return size_px - margin - (ys[i] - *ymin) * scale; };

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n", size_px,
                size_px, size_px, size_px);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int i = 0; i < 4; ++i) {
    std::snprintf(buf, sizeof buf, "%s%.12g,%.12g", i ? " " : "", sx(i), sy(i));
    out += buf;
  }
  out += "\"/>\n";
  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 3}}) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.12g\" y1=\"%.12g\" x2=\"%.12g\" y2=\"%.12g\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n",
                  sx(i), sy(i), sx(j), sy(j));
    out += buf;
  }
  for (int i = 0; i < 4; ++i) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.12g\" cy=\"%.12g\" r=\"4\" fill=\"black\"/>\n"
                  "<text x=\"%.12g\" y=\"%.12g\" font-family=\"sans-serif\" font-size=\"16\">%c</text>\n",
                  sx(i), sy(i), sx(i) + 8, sy(i) - 8, "ABCD"[i]);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace quadcert
