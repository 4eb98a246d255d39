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

#include "quadcert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace quadcert {

namespace {

const char* kind_name(HullClass::Kind k) {
  switch (k) {
    case HullClass::Kind::convex4: return "convex4";
    case HullClass::Kind::concave3: return "concave3";
    case HullClass::Kind::collinear4: return "collinear4";
    case HullClass::Kind::collinear3: return "collinear3";
  }
  return "?";
}

const char* sign_text(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

// A generate record carries its configuration under "config".
Json unwrap(Json doc) {
  if (doc.is_object() && !doc.contains("A") && doc.contains("config")) return doc["config"];
  return doc;
}

Json read_document(const std::string& path, const std::string& inline_json, std::istream& in) {
  if (!inline_json.empty()) return unwrap(Json::parse(inline_json));
  if (path.empty() || path == "-") return unwrap(Json::parse(in));
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  return unwrap(Json::parse(file));
}

QuadConfig read_config(const Json& doc) {
  if (!looks_like_config(doc)) throw std::invalid_argument("expected a configuration with points A, B, C, D");
  return config_from_json(doc);
}

}  // namespace

// ------------------------------------------------------------------ classify

Json classify_report(const Json& input) {
  Json report;
  std::optional<QuadConfig> cfg;
  DistSextuple d;
  if (looks_like_config(input)) {
    cfg = config_from_json(input);
    if (cfg->has_coincident_points()) throw std::invalid_argument("coincident points");
    d = cfg->distances();
    report["config"] = config_to_json(*cfg);
  } else {
    d = sextuple_from_json(input);
  }
  report["distances"] = sextuple_to_json(d);

  std::optional<HullClass> hull;
  if (cfg) {
    hull = classify_hull(*cfg);
    const SignedAreas s = signed_areas(*cfg);
    report["hull"] = {{"class", hull->describe()},
                      {"kind", kind_name(hull->kind)},
                      {"vertices", hull->vertices},
                      {"interior", hull->interior ? std::string(1, hull->interior) : std::string()}};
    report["signed_areas"] = {{"ABC", rational_to_json(s.abc)},
                              {"ABD", rational_to_json(s.abd)},
                              {"BCD", rational_to_json(s.bcd)},
                              {"ACD", rational_to_json(s.acd)}};
  }
  const Rational cm = cayley_menger(d);
  report["cayley_menger"] = rational_to_json(cm);

  std::map<ConditionId, int> signs;
  Json rows = Json::array();
  for (ConditionId id : all_conditions()) {
    const RadicalValue v = eval_condition(id, d);
    const int s = rad_sign(v);
    signs[id] = s;
    rows.push_back({{"condition", condition_name(id)}, {"value", to_string(v)}, {"sign", s}});
  }
  report["conditions"] = rows;
  report["witnesses"] = {{"supplementary", supplementary_witness(d)}, {"equal_angle", equal_angle_witness(d)}};

  Json verdicts = Json::array();
  if (cm != 0) verdicts.push_back("non-planar distances");
  const bool cyclic = signs[ConditionId::P] == 0;
  if (cyclic) verdicts.push_back(hull && hull->kind == HullClass::Kind::convex4 ? "cyclic, convex" : "cyclic");
  if (signs[ConditionId::R] == 0 && !cyclic) verdicts.push_back("supplementary-angle, non-cyclic");
  if (signs[ConditionId::R_T] == 0) verdicts.push_back("tilted kite");
  if (verdicts.empty()) verdicts.push_back("generic");
  report["verdicts"] = verdicts;
  return report;
}

std::string classify_text(const Json& report) {
  std::ostringstream out;
  if (report.contains("hull")) out << "hull: " << report["hull"]["class"].get<std::string>() << "\n";
  out << "CM: " << report["cayley_menger"].get<std::string>() << "\n";
  for (const auto& row : report["conditions"])
    out << std::left << std::setw(4) << row["condition"].get<std::string>() << " " << sign_text(row["sign"].get<int>())
        << "  " << row["value"].get<std::string>() << "\n";
  out << "supplementary witness: " << (report["witnesses"]["supplementary"].get<bool>() ? "yes" : "no") << "\n";
  out << "equal-angle witness: " << (report["witnesses"]["equal_angle"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& v : report["verdicts"]) out << "verdict: " << v.get<std::string>() << "\n";
  return out.str();
}

// ---------------------------------------------------------------- identities

Json identities_report(std::string_view group, const ConditionTable& table) {
  const std::vector<IdentityId> ids = group == "all" ? all_identities() : identities_in_group(group);
  Json rows = Json::array();
  int passed = 0;
  for (IdentityId id : ids) {
    const bool ok = verify_identity(id, table);
    passed += ok;
    rows.push_back({{"identity", identity_name(id)},
                    {"group", identity_group(id)},
                    {"relation", identity_text(id)},
                    {"holds", ok}});
  }
  return {{"group", std::string(group)}, {"identities", rows}, {"passed", passed}, {"total", ids.size()}};
}

// --------------------------------------------------------------------- prove

std::string prove_summary(const std::vector<Certificate>& certs, bool include_timing) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "claim" << std::setw(14) << "status" << std::right << std::setw(8) << "samples"
      << std::setw(12) << "mismatches";
  if (include_timing) out << std::setw(12) << "ms";
  out << "\n";
  std::map<std::string, int> tally;
  for (const auto& c : certs) {
    out << std::left << std::setw(20) << c.claim << std::setw(14) << status_name(c.status) << std::right
        << std::setw(8) << c.samples << std::setw(12) << c.mismatches;
    if (include_timing) out << std::setw(12) << std::fixed << std::setprecision(0) << c.elapsed_ms;
    out << "\n";
    ++tally[status_name(c.status)];
  }
  out << certs.size() << " certificates:";
  for (const auto& [name, n] : tally) out << " " << n << " " << name;
  out << "\n";
  for (const auto& c : certs)
    if (c.status == CertStatus::tier2_only || c.status == CertStatus::inconclusive)
      out << "flagged: " << c.claim << " is " << status_name(c.status) << " (" << c.tier1 << ")\n";
  return out.str();
}

// ------------------------------------------------------------------ generate

QuadConfig generate_one(std::string_view family, Rng& rng, bool concave, std::string_view order) {
  if (family == "cyclic") return gen_cyclic(rng, order);
  if (family == "tilted_kite") return gen_tilted_kite(rng, !concave);
  if (family == "folded") return gen_folded(rng);
  if (family == "reflected") return gen_reflected(rng);
  throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

Json generation_record(std::string_view family, long index, const QuadConfig& cfg) {
  Json zero = Json::array();
  for (ConditionId id : all_conditions())
    if (eval_condition(id, cfg.distances()).is_zero()) zero.push_back(condition_name(id));
  return {{"family", std::string(family)},
          {"index", index},
          {"config", config_to_json(cfg)},
          {"distances", sextuple_to_json(cfg.distances())},
          {"hull", classify_hull(cfg).describe()},
          {"zero_conditions", zero}};
}

// ----------------------------------------------------------------------- run

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification and certificates for planar quadrilaterals", "quadcert"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  double timeout_s = 600;
  int jobs = 1;
  std::string format = "json";
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--timeout", timeout_s, "seconds per Groebner run (0 skips symbolic tiers)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--jobs", jobs, "certificates run in parallel")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string input_path, inline_json;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "JSON file; stdin when omitted or '-'");
    cmd->add_option("--json", inline_json, "inline JSON document");
  };

  auto* classify = app.add_subcommand("classify", "hull, conditions and verdicts for one configuration");
  add_input(classify);

  std::string group = "all";
  auto* verify = app.add_subcommand("verify-identities", "expand the polynomial identities");
  verify->add_option("--group", group)->check(CLI::IsMember({"all", "base", "tilted", "symmetric"}))->capture_default_str();

  std::vector<std::string> claims{"all"};
  bool eliminate = false, timing = false;
  long samples = -1;
  auto* prove = app.add_subcommand("prove", "run certificates");
  prove->add_option("claims", claims, "claim names or 'all'")->capture_default_str();
  prove->add_flag("--eliminate", eliminate, "symbolic tier by full elimination of the scheme variables");
  prove->add_option("--samples", samples, "override every sampling tier's size");
  prove->add_flag("--timing", timing, "include elapsed times (output is then not reproducible)");

  std::string family;
  long count = 1;
  bool concave = false;
  std::string order = "ABCD";
  auto* generate = app.add_subcommand("generate", "seeded configurations of one family");
  generate->add_option("family", family)->required()->check(CLI::IsMember({"cyclic", "tilted_kite", "folded", "reflected"}));
  generate->add_option("--count", count)->check(CLI::PositiveNumber)->capture_default_str();
  generate->add_flag("--concave", concave, "concave tilted kites");
  generate->add_option("--order", order, "counterclockwise vertex order of cyclic samples")->capture_default_str();

  int size_px = 480;
  auto* svg = app.add_subcommand("render-svg", "SVG drawing of a configuration");
  add_input(svg);
  svg->add_option("--size", size_px)->check(CLI::Range(64, 8192))->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  if (!cm_self_check()) {
    err << "quadcert: Cayley-Menger self-check failed\n";
    return kExitFailed;
  }

  try {
    if (*classify) {
      const Json report = classify_report(read_document(input_path, inline_json, in));
      out << (format == "text" ? classify_text(report) : report.dump(2) + "\n");
      return kExitOk;
    }
    if (*verify) {
      const Json report = identities_report(group);
      if (format == "text") {
        for (const auto& row : report["identities"])
          out << std::left << std::setw(6) << row["identity"].get<std::string>() << (row["holds"].get<bool>() ? "pass" : "FAIL")
              << "  " << row["relation"].get<std::string>() << "\n";
        out << report["passed"].get<int>() << "/" << report["total"].get<int>() << " pass\n";
      } else {
        out << report.dump(2) << "\n";
      }
      return report["passed"] == report["total"] ? kExitOk : kExitFailed;
    }
    if (*prove) {
      CertOptions opts;
      opts.seed = seed;
      opts.timeout = std::chrono::milliseconds(std::llround(timeout_s * 1000));
      opts.eliminate = eliminate;
      opts.samples = samples;
      const std::vector<Certificate> certs = run_claims(claims, opts, jobs);
      if (format == "text") {
        out << prove_summary(certs, timing);
      } else {
        Json arr = Json::array();
        for (const auto& c : certs) arr.push_back(c.to_json(timing));
        out << arr.dump(2) << "\n";
      }
      const bool failed =
          std::any_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.status == CertStatus::failed; });
      return failed ? kExitFailed : kExitOk;
    }
    if (*generate) {
      Rng rng(seed);
      for (long i = 0; i < count; ++i) {
        const QuadConfig cfg = generate_one(family, rng, concave, order);
        const Json rec = generation_record(family, i, cfg);
        if (format == "text") {
          out << i << " " << rec["hull"].get<std::string>() << " " << rec["config"].dump() << " zero:";
          for (const auto& z : rec["zero_conditions"]) out << " " << z.get<std::string>();
          out << "\n";
        } else {
          out << rec.dump() << "\n";
        }
      }
      return kExitOk;
    }
    if (*svg) {
      out << render_svg(read_config(read_document(input_path, inline_json, in)), size_px);
      return kExitOk;
    }
  } catch (const Json::exception& e) {
    err << "quadcert: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "quadcert: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "quadcert: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "quadcert: internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInputError;
}

}  // namespace quadcert
