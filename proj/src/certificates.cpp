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

#include "quadcert/certificates.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "quadcert/determinant.hpp"
#include "quadcert/generators.hpp"

namespace quadcert {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BuchbergerOptions budget(const CertOptions& opts, PairSelection selection = PairSelection::normal) {
  BuchbergerOptions out;
  out.selection = selection;
  out.deadline = Clock::now() + opts.timeout;
  return out;
}

long sample_count(const CertOptions& opts, long fallback) { return opts.samples >= 0 ? opts.samples : fallback; }

std::vector<std::string> format_all(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(format(p));
  return out;
}

Polynomial product_of(const std::vector<std::string>& factors, const VarSet& vars) {
  Polynomial out = Polynomial::constant(vars, Rational(1));
  for (const auto& f : factors) out *= parse_polynomial(f, vars);
  return out;
}

// Factor texts parsed once over the distance variables.
const Polynomial& distance_factor(const std::string& text) {
  static std::mutex lock;
  static std::map<std::string, Polynomial> cache;
  const std::scoped_lock guard(lock);
  auto it = cache.find(text);
  if (it == cache.end()) it = cache.emplace(text, parse_polynomial(text, distance_vars())).first;
  return it->second;
}

RadicalValue value_of(const std::vector<std::string>& factors, const DistSextuple& d) {
  RadicalValue out(Rational(1));
  for (const auto& f : factors) out = out * evaluate_at_distances(distance_factor(f), d);
  return out;
}

// Random proper rigid motion with rational entries.
QuadConfig move_rigidly(const QuadConfig& cfg, Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  const Point rot = circle_point(Rational(num(rng), den(rng)));
  const Point shift{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
  std::array<Point, 4> out;
  for (int i = 0; i < 4; ++i) {
    const Point& p = cfg.points()[i];
    out[i] = {rot.x * p.x - rot.y * p.y + shift.x, rot.y * p.x + rot.x * p.y + shift.y};
    out[i].x.canonicalize();
    out[i].y.canonicalize();
  }
  return QuadConfig(out[0], out[1], out[2], out[3]);
}

Rational random_positive(Rng& rng, int hi = 12, int max_den = 4) {
  Rational r(std::uniform_int_distribution<int>(1, hi)(rng), std::uniform_int_distribution<int>(1, max_den)(rng));
  r.canonicalize();
  return r;
}

bool all_areas_zero(const QuadConfig& cfg) {
  const SignedAreas s = signed_areas(cfg);
  return s.abc == 0 && s.abd == 0 && s.bcd == 0 && s.acd == 0;
}

std::string hull_list(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

// Hull names of realizable, non-degenerate table rows with the given sign of
// the area ABC that satisfy `keep`.
std::vector<std::string> table_rows(int abc_sign, const std::function<bool(int, int, int, int)>& keep) {
  std::vector<std::string> out;
  for (int abd : {1, -1})
    for (int bcd : {1, -1})
      for (int acd : {1, -1}) {
        if (!keep(abc_sign, abd, bcd, acd)) continue;
        try {
          out.push_back(classify_signs(abc_sign, abd, bcd, acd).vertices);
        } catch (const std::logic_error&) {
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

// -------------------------------------------------------- coordinate schemes

Polynomial CoordinateScheme::delta(Vertex p, Vertex q, Vertex r) const {
  const Polynomial one = Polynomial::constant(vars, Rational(1));
  Matrix<Polynomial> m;
  for (Vertex v : {p, q, r}) {
    const auto& pt = points[static_cast<int>(v)];
    m.push_back({pt[0], pt[1], one});
  }
  return determinant(m);
}

Polynomial CoordinateScheme::cocircularity() const {
  const Polynomial one = Polynomial::constant(vars, Rational(1));
  Matrix<Polynomial> m;
  for (const auto& pt : points) m.push_back({pt[0] * pt[0] + pt[1] * pt[1], pt[0], pt[1], one});
  return determinant(m);
}

Polynomial CoordinateScheme::condition(ConditionId id) const { return condition_poly(id).embed(vars); }

const CoordinateScheme& coordinate_scheme(SchemeKind kind) {
  static const std::array<CoordinateScheme, 3> schemes = [] {
    const VarSet vars{"a", "b", "c", "d", "e", "f", "u", "v", "w", "z"};
    auto P = [&](const char* text) { return parse_polynomial(text, vars); };
    auto build = [&](SchemeKind k, const char* name, std::array<std::array<const char*, 2>, 4> pts,
                     std::array<const char*, 5> gens) {
      CoordinateScheme s{k, name, vars, {}, {}};
      for (int i = 0; i < 4; ++i) s.points[i] = {P(pts[i][0]), P(pts[i][1])};
      for (const char* g : gens) s.generators.push_back(P(g));
      return s;
    };
    return std::array<CoordinateScheme, 3>{
        build(SchemeKind::ptolemy, "ptolemy", {{{"0", "0"}, {"a", "0"}, {"u", "v"}, {"w", "z"}}},
              {"(u-a)^2 + v^2 - b^2", "(w-u)^2 + (z-v)^2 - c^2", "w^2 + z^2 - d^2", "u^2 + v^2 - e^2",
               "(w-a)^2 + z^2 - f^2"}),
        build(SchemeKind::r_scheme, "R_scheme", {{{"u", "v"}, {"f", "0"}, {"w", "z"}, {"0", "0"}}},
              {"(u-f)^2 + v^2 - a^2", "(u-w)^2 + (z-v)^2 - e^2", "w^2 + z^2 - c^2", "u^2 + v^2 - d^2",
               "(w-f)^2 + z^2 - b^2"}),
        build(SchemeKind::t_scheme, "T_scheme", {{{"0", "0"}, {"u", "v"}, {"e", "0"}, {"w", "z"}}},
              {"u^2 + v^2 - a^2", "(e-u)^2 + v^2 - b^2", "(w-e)^2 + z^2 - c^2", "w^2 + z^2 - d^2",
               "(u-w)^2 + (z-v)^2 - f^2"}),
    };
  }();
  return schemes[static_cast<int>(kind)];
}

// ------------------------------------------------------------------ report

std::string status_name(CertStatus s) {
  switch (s) {
    case CertStatus::certified: return "CERTIFIED";
    case CertStatus::supported: return "SUPPORTED";
    case CertStatus::tier2_only: return "TIER2-ONLY";
    case CertStatus::inconclusive: return "INCONCLUSIVE";
    case CertStatus::failed: return "FAILED";
  }
  return "?";
}

Json Certificate::to_json(bool include_timing) const {
  Json j;
  j["claim"] = claim;
  j["status"] = status_name(status);
  j["ideal"] = ideal;
  j["order"] = order;
  j["reduced_basis"] = reduced_basis;
  j["elapsed_ms"] = include_timing ? Json(elapsed_ms) : Json(nullptr);
  j["tier1"] = tier1;
  j["tier2"] = tier2;
  j["samples"] = samples;
  j["mismatches"] = mismatches;
  j["notes"] = notes;
  return j;
}

// -------------------------------------------------------- converse Ptolemy

Certificate cert_converse_ptolemy(const CertOptions& opts) {
  const auto start = Clock::now();
  Certificate cert;
  cert.claim = "converse_ptolemy";
  cert.order = "grevlex";
  const CoordinateScheme& scheme = coordinate_scheme(SchemeKind::ptolemy);
  const VarSet vars = scheme.vars.with_appended("t");
  const Polynomial circle = scheme.cocircularity().embed(vars);
  const Polynomial t = Polynomial::variable(vars, "t");

  std::vector<Polynomial> ideal;
  for (const auto& g : scheme.generators) ideal.push_back(g.embed(vars));
  ideal.push_back(scheme.condition(ConditionId::P).embed(vars));
  ideal.push_back(Polynomial::constant(vars, Rational(1)) - t * circle);
  cert.ideal = format_all(ideal);

  // A hand expansion with -v^2 z tripled circulates; report how it relates
  // to the determinant.
  const Polynomial printed =
      parse_polynomial("a(-a v w + v w^2 + a u z - u^2 z - v^2 z - v^2 z - v^2 z + v z^2)", scheme.vars);
  const Polynomial single = parse_polynomial("a(-a v w + v w^2 + a u z - u^2 z - v^2 z + v z^2)", scheme.vars);
  const Polynomial derived = scheme.cocircularity();
  if (derived == printed) {
    cert.notes.push_back("cocircularity polynomial: determinant agrees with the tripled -v^2 z expansion");
  } else {
    std::string relation = derived == single ? "equals" : derived == -single ? "is the negative of" : "differs from";
    cert.notes.push_back("cocircularity polynomial taken from the 4x4 determinant: " + format(derived) + "; it " +
                         relation + " a(-avw + vw^2 + auz - u^2z - v^2z + vz^2) and is not the variant with -v^2z tripled");
  }

  // Symbolic tier.
  enum class Tier1 { unit, not_unit, timeout, skipped } tier1 = Tier1::skipped;
  if (opts.timeout.count() > 0) {
    try {
      BuchbergerStats stats;
      const GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), budget(opts), &stats);
      cert.reduced_basis = format_all(gb.generators);
      tier1 = gb.is_unit() ? Tier1::unit : Tier1::not_unit;
      cert.tier1 = std::string("reduced basis ") + (gb.is_unit() ? "{1}" : "is not {1}") + " after " +
                   std::to_string(stats.pairs_reduced) + " S-pair reductions";
      // Control: without P the ideal must stay proper.
      std::vector<Polynomial> without_p = ideal;
      without_p.erase(without_p.end() - 2);
      const GroebnerBasis control = buchberger(without_p, MonomialOrder::grevlex(), budget(opts));
      if (control.is_unit()) {
        tier1 = Tier1::not_unit;
        cert.notes.push_back("control failed: basis is {1} even with P removed");
      } else {
        cert.notes.push_back("control: with P removed the reduced basis has " +
                             std::to_string(control.generators.size()) + " elements, not {1}");
      }
    } catch (const GroebnerTimeout&) {
      tier1 = Tier1::timeout;
      cert.tier1 = "timed out";
    }
  } else {
    cert.tier1 = "skipped (zero timeout)";
  }

  // Sampling tier: concyclic quadrilaterals in sequential order.
  Rng rng(opts.seed);
  const long n = sample_count(opts, 500);
  long hull_ok = 0;
  for (long i = 0; i < n; ++i) {
    const QuadConfig cfg = gen_cyclic(rng, i % 2 ? "ADCB" : "ABCD");
    ++cert.samples;
    const bool p_zero = eval_condition(ConditionId::P, cfg.distances()).is_zero();
    if (!p_zero || cocircularity(cfg) != 0) ++cert.mismatches;
    const HullClass hull = classify_hull(cfg);
    if (hull.kind == HullClass::Kind::convex4 && (hull.vertices == "ABCD" || hull.vertices == "ADCB")) ++hull_ok;
  }
  cert.tier2 = std::to_string(cert.samples) + " cyclic samples with P = 0, " + std::to_string(cert.mismatches) +
               " with nonzero cocircularity determinant; " + std::to_string(hull_ok) + " convex with order ABCD/ADCB";
  if (hull_ok != cert.samples) ++cert.mismatches;
  cert.notes.push_back("counterclockwise order checked as ABCD or ADCB; ADBC (not sequential) never occurs");

  const bool tier2_ok = cert.mismatches == 0;
  if (tier1 == Tier1::not_unit || !tier2_ok) cert.status = CertStatus::failed;
  else if (tier1 == Tier1::unit) cert.status = CertStatus::certified;
  else cert.status = CertStatus::tier2_only;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

// ------------------------------------------------------ elimination formulas

namespace {

const std::vector<std::string> kPtolemyProduct{"(-a+b+c+d)", "(a-b+c+d)", "(a+b-c+d)", "(a+b+c-d)"};
const std::vector<std::string> kFoldProduct{"(-d+a+c+b)", "(d-a+c+b)", "(d+a-c+b)", "(d+a+c-b)"};
const std::vector<std::string> kKiteProduct{"(d+a+c+b)", "(d+a-c-b)", "(-d+a+c-b)", "(-d+a-c+b)"};

std::vector<std::string> join(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::vector<ClosedForm>& closed_forms() {
  using T = EliminationTarget;
  using V = Vertex;
  static const std::vector<ClosedForm> forms{
      {T::N_ptolemy, SchemeKind::ptolemy, ConditionId::P, {{V::A, V::B, V::C}, {V::A, V::C, V::D}}, false,
       join({{"a", "b", "c", "d"}, kPtolemyProduct}), {"4", "(ab+cd)^2"}, +1, "t"},
      {T::M_ptolemy, SchemeKind::ptolemy, ConditionId::P, {{V::A, V::B, V::D}, {V::B, V::C, V::D}}, false,
       join({{"a", "b", "c", "d"}, kPtolemyProduct}), {"4", "(bc+ad)^2"}, +1, "t"},
      {T::N_R, SchemeKind::r_scheme, ConditionId::R, {{V::A, V::B, V::C}, {V::A, V::C, V::D}}, false,
       join({{"-1"}, kFoldProduct, {"a", "b", "c", "d"}}), {"4", "(ab+cd)^2"}, -1, "t"},
      {T::ABD_R, SchemeKind::r_scheme, ConditionId::R, {{V::A, V::B, V::D}}, true,
       join({kFoldProduct, {"(b+c)^2", "(b-c)^2", "d^2", "a^2"}}), {"4", "(ab+cd)^2", "(ac+bd)^2"}, 0, "s"},
      {T::BCD_R, SchemeKind::r_scheme, ConditionId::R, {{V::B, V::C, V::D}}, true,
       join({kFoldProduct, {"(a+d)^2", "(a-d)^2", "c^2", "b^2"}}), {"4", "(ab+cd)^2", "(ac+bd)^2"}, 0, "eta"},
      {T::M_T, SchemeKind::t_scheme, ConditionId::R_T, {{V::A, V::B, V::D}, {V::B, V::C, V::D}}, false,
       join({{"-1", "a", "b", "c", "d"}, kKiteProduct}), {"4", "(ad-bc)^2"}, +1, "t"},
      {T::ABD_T, SchemeKind::t_scheme, ConditionId::R_T, {{V::A, V::B, V::D}}, true,
       join({{"-1"}, kKiteProduct, {"d^2", "a^2"}}), {"4", "(ad-bc)^2"}, 0, "s"},
      {T::BCD_T, SchemeKind::t_scheme, ConditionId::R_T, {{V::B, V::C, V::D}}, true,
       join({{"-1"}, kKiteProduct, {"c^2", "b^2"}}), {"4", "(ad-bc)^2"}, 0, "s"},
      {T::ABC_T, SchemeKind::t_scheme, ConditionId::R_T, {{V::A, V::B, V::C}}, true,
       join({{"-1"}, kKiteProduct, {"(c+d)^2", "(c-d)^2", "b^2", "a^2"}}), {"4", "(ac-bd)^2", "(ad-bc)^2"}, 0, "s"},
      {T::ACD_T, SchemeKind::t_scheme, ConditionId::R_T, {{V::A, V::C, V::D}}, true,
       join({{"-1"}, kKiteProduct, {"(a+b)^2", "(a-b)^2", "d^2", "c^2"}}), {"4", "(ac-bd)^2", "(ad-bc)^2"}, 0, "s"},
  };
  return forms;
}

constexpr const char* kTargetNames[] = {"N_ptolemy", "M_ptolemy", "N_R",   "ABD_R", "BCD_R",
                                        "M_T",       "ABD_T",     "BCD_T", "ABC_T", "ACD_T"};

Rational area_quantity(const ClosedForm& form, const QuadConfig& cfg) {
  Rational q(1);
  for (const auto& tri : form.areas) q *= signed_area(cfg[tri[0]], cfg[tri[1]], cfg[tri[2]]);
  return form.squared ? q * q : q;
}

Polynomial scheme_quantity(const ClosedForm& form, const CoordinateScheme& scheme) {
  Polynomial q = Polynomial::constant(scheme.vars, Rational(1));
  for (const auto& tri : form.areas) q *= scheme.delta(tri[0], tri[1], tri[2]);
  return form.squared ? q * q : q;
}

// den^deg * L(num/den) for L given by its coefficients in the slack.
Polynomial cleared_value(const std::vector<Polynomial>& coeffs, const Polynomial& num, const Polynomial& den) {
  const std::size_t deg = coeffs.size() - 1;
  Polynomial total(num.vars());
  for (std::size_t k = 0; k <= deg; ++k)
    if (!coeffs[k].is_zero()) total += coeffs[k] * num.pow(static_cast<unsigned>(k)) * den.pow(static_cast<unsigned>(deg - k));
  return total;
}

// Does L(s) vanish at a root of s^2 = num/den? Split L = E(s^2) + s O(s^2);
// that happens iff E(S)^2 - S O(S)^2 = 0 at S = num/den.
bool square_root_is_root(const std::vector<Polynomial>& coeffs, const Polynomial& num, const Polynomial& den) {
  std::vector<Polynomial> even, odd;
  for (std::size_t k = 0; k < coeffs.size(); ++k) (k % 2 ? odd : even).push_back(coeffs[k]);
  while (!odd.empty() && odd.back().is_zero()) odd.pop_back();
  while (!even.empty() && even.back().is_zero()) even.pop_back();
  if (odd.empty()) return even.empty() || cleared_value(even, num, den).is_zero();
  if (even.empty()) return cleared_value(odd, num, den).is_zero();
  const int de = static_cast<int>(even.size()) - 1, dodd = static_cast<int>(odd.size()) - 1;
  const int top = std::max(2 * de, 2 * dodd + 1);
  const Polynomial e = cleared_value(even, num, den), o = cleared_value(odd, num, den);
  return (e * e * den.pow(top - 2 * de) - num * o * o * den.pow(top - 2 * dodd - 1)).is_zero();
}

using HullLists = std::pair<std::vector<std::string>, std::vector<std::string>>;  // ABC > 0, ABC < 0

// Hull lists stated for each family, and the sign rule they come from.
std::optional<HullLists> stated_hulls(ConditionId family) {
  if (family == ConditionId::R) return HullLists{{"ABC", "CAD", "ABDC", "ADBC"}, {"ACB", "CDA", "ACDB", "ACBD"}};
  if (family == ConditionId::R_T) return HullLists{{"ABCD", "ABC", "CAD"}, {"ADCB", "ACB", "CDA"}};
  return std::nullopt;
}

void note_hull_naming(ConditionId family, Certificate& cert) {
  const auto stated = stated_hulls(family);
  if (!stated) return;
  std::function<bool(int, int, int, int)> rule;
  std::string rule_name;
  if (family == ConditionId::R) {
    rule = [](int abc, int, int, int acd) { return abc * acd <= 0; };
    rule_name = "N <= 0";
  } else {
    rule = [](int, int abd, int bcd, int) { return abd * bcd >= 0; };
    rule_name = "M >= 0";
  }
  const auto pos = table_rows(+1, rule), neg = table_rows(-1, rule);
  const bool match = pos == sorted(stated->first) && neg == sorted(stated->second);
  cert.notes.push_back("hull table rows with " + rule_name + ": {" + hull_list(pos) + "} for ABC > 0 and {" +
                       hull_list(neg) + "} for ABC < 0; " +
                       (match ? "no naming mismatch with the stated hull lists"
                              : "MISMATCH with the stated lists {" + hull_list(stated->first) + "} / {" +
                                    hull_list(stated->second) + "}"));
  if (!match) cert.status = CertStatus::failed;
}

QuadConfig family_sample(SchemeKind scheme, Rng& rng, long index) {
  switch (scheme) {
    case SchemeKind::ptolemy: return gen_cyclic(rng, index % 2 ? "ADCB" : "ABCD");
    case SchemeKind::r_scheme: return gen_folded(rng);
    case SchemeKind::t_scheme:
      switch (index % 3) {
        case 0: return gen_tilted_kite(rng, true);
        case 1: return gen_tilted_kite(rng, false);
        default: return gen_reflected(rng);
      }
  }
  throw std::logic_error("unknown scheme");
}

}  // namespace

const std::vector<EliminationTarget>& all_elimination_targets() {
  static const std::vector<EliminationTarget> targets = [] {
    std::vector<EliminationTarget> out;
    for (const auto& f : closed_forms()) out.push_back(f.target);
    return out;
  }();
  return targets;
}

std::string target_name(EliminationTarget t) { return kTargetNames[static_cast<int>(t)]; }

EliminationTarget parse_target(std::string_view name) {
  for (int i = 0; i < 10; ++i)
    if (name == kTargetNames[i]) return static_cast<EliminationTarget>(i);
  throw std::invalid_argument("unknown elimination target '" + std::string(name) + "'");
}

const ClosedForm& closed_form(EliminationTarget t) { return closed_forms()[static_cast<int>(t)]; }

std::optional<bool> closed_form_matches(const ClosedForm& form, const QuadConfig& cfg) {
  const RadicalValue den = value_of(form.denominator, cfg.distances());
  if (den.is_zero()) return std::nullopt;
  return RadicalValue(area_quantity(form, cfg)) * den == value_of(form.numerator, cfg.distances());
}

Certificate cert_elimination_formula(EliminationTarget target, const CertOptions& opts) {
  const auto start = Clock::now();
  const ClosedForm& form = closed_form(target);
  const CoordinateScheme& scheme = coordinate_scheme(form.scheme);
  Certificate cert;
  cert.claim = target_name(target);

  std::vector<Polynomial> ideal = scheme.generators;
  ideal.push_back(scheme.condition(form.condition));
  const Polynomial num = product_of(form.numerator, scheme.vars), den = product_of(form.denominator, scheme.vars);
  const Polynomial quantity = scheme_quantity(form, scheme);

  enum class Tier1 { proved, refuted, timeout, skipped } tier1 = Tier1::skipped;
  if (opts.timeout.count() <= 0) {
    cert.tier1 = "skipped (zero timeout)";
    cert.ideal = format_all(ideal);
  } else {
    try {
      const GroebnerBasis proper = buchberger(ideal, MonomialOrder::grevlex(), budget(opts));
      if (proper.is_unit()) {
        tier1 = Tier1::refuted;
        cert.notes.push_back("control failed: the scheme ideal is the whole ring");
      } else {
        cert.notes.push_back("control: the scheme ideal is proper (reduced grevlex basis of " +
                             std::to_string(proper.generators.size()) + " elements)");
      }
      if (tier1 != Tier1::refuted && !opts.eliminate) {
        cert.order = "grevlex";
        cert.ideal = format_all(ideal);
        const Polynomial relation = den * quantity - num;
        cert.ideal.push_back("1 - y*(" + std::string(form.squared ? "den*Delta^2 - num" : "den*Delta - num") + ")");
        BuchbergerStats stats;
        const bool member = radical_membership(relation, ideal, MonomialOrder::grevlex(), budget(opts), &stats);
        tier1 = member ? Tier1::proved : Tier1::refuted;
        if (member) cert.reduced_basis = {"1"};
        cert.tier1 = std::string("cleared relation ") + (member ? "is" : "is not") +
                     " in the radical of the scheme ideal (" + std::to_string(stats.pairs_reduced) +
                     " S-pair reductions)";
      } else if (tier1 != Tier1::refuted) {
        const VarSet vars = scheme.vars.with_appended(form.slack);
        const Polynomial slack = Polynomial::variable(vars, form.slack);
        std::vector<Polynomial> aug;
        for (const auto& g : ideal) aug.push_back(g.embed(vars));
        Polynomial area = Polynomial::constant(vars, Rational(1));
        for (const auto& tri : form.areas) area *= scheme.delta(tri[0], tri[1], tri[2]).embed(vars);
        aug.push_back(area - slack);
        cert.ideal = format_all(aug);
        cert.order = "block(6) eliminating e,f,u,v,w,z";
        const std::vector<std::string> drop{"e", "f", "u", "v", "w", "z"};
        const auto eliminated = elimination_ideal(aug, drop, EliminationOrder::block, budget(opts, PairSelection::sugar));
        cert.reduced_basis = format_all(eliminated);
        const std::size_t slack_index = vars.require(form.slack);
        const Polynomial* best = nullptr;
        for (const auto& p : eliminated)
          if (p.degree_in(slack_index) > 0 && (!best || p.degree_in(slack_index) < best->degree_in(slack_index)))
            best = &p;
        if (!best) {
          tier1 = Tier1::refuted;
          cert.tier1 = "elimination ideal has no polynomial in the slack variable";
        } else {
          const auto coeffs = best->coefficients_in(slack_index);
          const Polynomial n = num.embed(vars), dd = den.embed(vars);
          const bool root = form.squared ? square_root_is_root(coeffs, n, dd) : cleared_value(coeffs, n, dd).is_zero();
          tier1 = root ? Tier1::proved : Tier1::refuted;
          cert.tier1 = "eliminant of degree " + std::to_string(best->degree_in(slack_index)) + " in " + form.slack +
                       " with " + std::to_string(best->size()) + " terms; closed form " + (root ? "is" : "is not") +
                       " a root";
        }
      }
    } catch (const GroebnerTimeout&) {
      tier1 = Tier1::timeout;
      cert.tier1 = "timed out";
    }
  }

  // Sampling tier on the matching family.
  Rng rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(target) + 1)));
  const long wanted = sample_count(opts, 1000);
  long skipped = 0, sign_bad = 0, gamma_bad = 0, hull_bad = 0;
  const auto stated = stated_hulls(form.condition);
  const bool check_hulls = target == EliminationTarget::N_R || target == EliminationTarget::M_T;
  for (long i = 0; cert.samples < wanted && i < 20 * wanted + 100; ++i) {
    const QuadConfig cfg = family_sample(form.scheme, rng, i);
    const DistSextuple& d = cfg.distances();
    if (!eval_condition(form.condition, d).is_zero()) {
      ++cert.mismatches;
      continue;
    }
    const auto match = closed_form_matches(form, cfg);
    if (!match) {
      ++skipped;
      continue;
    }
    ++cert.samples;
    if (!*match) ++cert.mismatches;
    if (form.sign_claim != 0 && sgn(area_quantity(form, cfg)) * form.sign_claim < 0) ++sign_bad;
    if (form.scheme == SchemeKind::t_scheme && rad_sign(value_of(join({{"-1"}, kKiteProduct}), d)) < 0) ++gamma_bad;
    if (check_hulls) {
      const HullClass hull = classify_hull(cfg);
      const auto& list = sgn(signed_areas(cfg).abc) > 0 ? stated->first : stated->second;
      if (std::find(list.begin(), list.end(), hull.vertices) == list.end()) ++hull_bad;
    }
  }
  cert.mismatches += sign_bad + gamma_bad + hull_bad;
  std::ostringstream summary;
  summary << cert.samples << " exact family instances, " << cert.mismatches << " mismatches, " << skipped
          << " skipped (zero denominator)";
  if (form.sign_claim != 0) summary << "; sign claim " << (form.sign_claim > 0 ? ">= 0" : "<= 0") << " violated " << sign_bad << " times";
  if (form.scheme == SchemeKind::t_scheme) summary << "; -Gamma < 0 in " << gamma_bad << " instances";
  if (check_hulls) summary << "; hull outside the stated list in " << hull_bad << " instances";
  cert.tier2 = summary.str();
  if (form.squared) cert.notes.push_back("square-root form checked through the squared area");

  const bool tier2_ok = cert.mismatches == 0 && cert.samples >= wanted;
  if (tier1 == Tier1::refuted || !tier2_ok) cert.status = CertStatus::failed;
  else if (tier1 == Tier1::proved) cert.status = CertStatus::certified;
  else cert.status = CertStatus::tier2_only;
  if (check_hulls) note_hull_naming(form.condition, cert);
  cert.elapsed_ms = ms_since(start);
  return cert;
}

// --------------------------------------------------------- parallelogram case

Certificate cert_parallelogram_case(const CertOptions& opts) {
  const auto start = Clock::now();
  const CoordinateScheme& scheme = coordinate_scheme(SchemeKind::t_scheme);
  Certificate cert;
  cert.claim = "parallelogram_case";
  std::vector<Polynomial> ideal = scheme.generators;
  ideal.push_back(scheme.condition(ConditionId::R_T));
  ideal.push_back(parse_polynomial("ad - bc", scheme.vars));
  const Polynomial product = parse_polynomial("b^2c^2(a-c)^2(a+c)^2(a-b)^2(a+b)^2", scheme.vars);
  cert.ideal = format_all(ideal);
  cert.order = "grevlex";

  enum class Tier1 { proved, refuted, timeout, skipped } tier1 = Tier1::skipped;
  if (opts.timeout.count() > 0) {
    try {
      if (buchberger(ideal, MonomialOrder::grevlex(), budget(opts)).is_unit()) {
        tier1 = Tier1::refuted;
        cert.notes.push_back("control failed: the ideal is the whole ring");
      } else {
        cert.notes.push_back("control: the ideal itself is proper");
        BuchbergerStats stats;
        const bool member = radical_membership(product, ideal, MonomialOrder::grevlex(), budget(opts), &stats);
        tier1 = member ? Tier1::proved : Tier1::refuted;
        if (member) cert.reduced_basis = {"1"};
        cert.ideal.push_back("1 - y*(" + format(product) + ")");
        cert.tier1 = std::string("b^2c^2(a-c)^2(a+c)^2(a-b)^2(a+b)^2 ") + (member ? "is" : "is not") +
                     " in the radical (" + std::to_string(stats.pairs_reduced) + " S-pair reductions)";
      }
    } catch (const GroebnerTimeout&) {
      tier1 = Tier1::timeout;
      cert.tier1 = "timed out";
    }
  } else {
    cert.tier1 = "skipped (zero timeout)";
  }

  // Parallelograms (a = c, b = d) and kites symmetric about BD (a = b, c = d).
  Rng rng(opts.seed ^ 0x5bd1e995ULL);
  const long n = sample_count(opts, 500);
  long law_fail_kites = 0, parallelograms = 0, kites = 0;
  std::uniform_int_distribution<int> coord(-12, 12), den(1, 5);
  auto rnd = [&] {
    Rational r(coord(rng), den(rng));
    r.canonicalize();
    return r;
  };
  for (long i = 0; cert.samples < n && i < 100 * n; ++i) {
    QuadConfig cfg = [&] {
      if (i % 2 == 0) {
        const Point p{rnd(), rnd()}, q{rnd(), rnd()};
        return QuadConfig({0, 0}, p, {p.x + q.x, p.y + q.y}, q);
      }
      // B and D on the perpendicular bisector of AC.
      const Rational half = random_positive(rng), tb = rnd(), td = rnd();
      return QuadConfig({-half, 0}, {0, tb}, {half, 0}, {0, td});
    }();
    if (cfg.has_coincident_points() || all_areas_zero(cfg)) continue;
    cfg = move_rigidly(cfg, rng);
    const DistSextuple& d = cfg.distances();
    const bool on_ideal = eval_condition(ConditionId::R_T, d).is_zero() &&
                          evaluate_at_distances(parse_polynomial("ad - bc", distance_vars()), d).is_zero();
    if (!on_ideal) {
      ++cert.mismatches;
      continue;
    }
    ++cert.samples;
    const bool first = d.qa == d.qc && d.qb == d.qd, second = d.qa == d.qb && d.qc == d.qd;
    if (!first && !second) ++cert.mismatches;
    const bool law = 2 * d.qa + 2 * d.qb - d.qe - d.qf == 0;
    if (first) {
      ++parallelograms;
      if (!law) ++cert.mismatches;
    } else if (second) {
      ++kites;
      if (!law) ++law_fail_kites;
    }
  }
  cert.tier2 = std::to_string(cert.samples) + " instances with R_T = 0 and ad = bc (" + std::to_string(parallelograms) +
               " with a = c, b = d; " + std::to_string(kites) + " with a = b, c = d only), " +
               std::to_string(cert.mismatches) + " outside both branches or violating the parallelogram law";
  cert.notes.push_back("parallelogram law checked on the a = c, b = d branch; it fails on " +
                       std::to_string(law_fail_kites) + " of the symmetric kites, which satisfy R_T = 0 and ad = bc");

  const bool tier2_ok = cert.mismatches == 0 && cert.samples >= n;
  if (tier1 == Tier1::refuted || !tier2_ok) cert.status = CertStatus::failed;
  else if (tier1 == Tier1::proved) cert.status = CertStatus::certified;
  else cert.status = CertStatus::tier2_only;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

// ------------------------------------------------------------ degenerate cases

namespace {

struct DegenerateCase {
  std::string label;
  std::string lemma_lhs, lemma_rhs;  // identity in the scheme variables
  std::function<std::optional<QuadConfig>(Rng&)> build;
  std::function<bool(const DistSextuple&)> isosceles;
  std::array<Vertex, 3> collinear;
};

Point pt(const Rational& x, const Rational& y) { return {x, y}; }

Rational outside_interval(Rng& rng, const Rational& len) {
  Rational r = random_positive(rng, 12, 4);
  if (std::uniform_int_distribution<int>(0, 1)(rng)) return -r;
  return len + r;
}

Rational inside_interval(Rng& rng, const Rational& len) {
  const int den = std::uniform_int_distribution<int>(2, 9)(rng);
  Rational r(std::uniform_int_distribution<int>(1, den - 1)(rng), den);
  r.canonicalize();
  return r * len;
}

std::vector<DegenerateCase> degenerate_cases(ConditionId family) {
  using V = Vertex;
  if (family == ConditionId::R) {
    return {
        {"A, B, D collinear with b = c", "h5 - h3 + b^2 - c^2", "f(f-2w)",
         [](Rng& rng) -> std::optional<QuadConfig> {
           const Rational len = random_positive(rng), h = random_positive(rng);
           return QuadConfig(pt(outside_interval(rng, len), 0), pt(len, 0), pt(len / 2, h), pt(0, 0));
         },
         [](const DistSextuple& d) { return d.qb == d.qc; }, {V::A, V::B, V::D}},
        {"B, C, D collinear with a = d", "h1 - h4 + a^2 - d^2", "f(f-2u)",
         [](Rng& rng) -> std::optional<QuadConfig> {
           const Rational len = random_positive(rng), h = random_positive(rng);
           return QuadConfig(pt(len / 2, h), pt(len, 0), pt(outside_interval(rng, len), 0), pt(0, 0));
         },
         [](const DistSextuple& d) { return d.qa == d.qd; }, {V::B, V::C, V::D}},
    };
  }
  return {
      {"A, B, C collinear with c = d", "g3 - g4 + c^2 - d^2", "e(e-2w)",
       [](Rng& rng) -> std::optional<QuadConfig> {
         const Rational len = random_positive(rng), h = random_positive(rng);
         return QuadConfig(pt(0, 0), pt(inside_interval(rng, len), 0), pt(len, 0), pt(len / 2, h));
       },
       [](const DistSextuple& d) { return d.qc == d.qd; }, {V::A, V::B, V::C}},
      {"A, C, D collinear with a = b", "g2 - g1 + b^2 - a^2", "e(e-2u)",
       [](Rng& rng) -> std::optional<QuadConfig> {
         const Rational len = random_positive(rng), h = random_positive(rng);
         return QuadConfig(pt(0, 0), pt(len / 2, h), pt(len, 0), pt(inside_interval(rng, len), 0));
       },
       [](const DistSextuple& d) { return d.qa == d.qb; }, {V::A, V::C, V::D}},
  };
}

Polynomial scheme_lemma_side(const std::string& text, const CoordinateScheme& scheme, char prefix) {
  // Generator names hi / gi are substituted before parsing.
  std::string expanded;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == prefix && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      expanded += "(" + format(scheme.generators[text[i + 1] - '1']) + ")";
      ++i;
    } else {
      expanded += text[i];
    }
  }
  return parse_polynomial(expanded, scheme.vars);
}

}  // namespace

Certificate cert_degenerate_cases(ConditionId family, const CertOptions& opts) {
  if (family != ConditionId::R && family != ConditionId::R_T)
    throw std::invalid_argument("degenerate cases exist for R and R_T only");
  const auto start = Clock::now();
  const bool r_family = family == ConditionId::R;
  const CoordinateScheme& scheme = coordinate_scheme(r_family ? SchemeKind::r_scheme : SchemeKind::t_scheme);
  Certificate cert;
  cert.claim = r_family ? "degenerate_R" : "degenerate_R_T";
  cert.ideal = format_all(scheme.generators);
  cert.order = "grevlex";

  std::vector<std::string> lemma_lines;
  Rng rng(opts.seed ^ (r_family ? 0x243f6a88ULL : 0x85a308d3ULL));
  const long per_case = sample_count(opts, 200);
  for (const auto& dc : degenerate_cases(family)) {
    const Polynomial lhs = scheme_lemma_side(dc.lemma_lhs, scheme, r_family ? 'h' : 'g');
    const Polynomial rhs = parse_polynomial(dc.lemma_rhs, scheme.vars);
    const bool lemma = lhs == rhs;
    if (!lemma) ++cert.mismatches;
    lemma_lines.push_back(dc.lemma_lhs + " = " + dc.lemma_rhs + (lemma ? " (holds)" : " (FAILS)"));
    long built = 0;
    for (long i = 0; built < per_case && i < 100 * per_case; ++i) {
      auto cfg = dc.build(rng);
      if (!cfg || cfg->has_coincident_points()) continue;
      const QuadConfig moved = move_rigidly(*cfg, rng);
      ++built;
      ++cert.samples;
      const DistSextuple& d = moved.distances();
      const auto& [p, q, r] = dc.collinear;
      const bool ok = eval_condition(family, d).is_zero() && dc.isosceles(d) &&
                      signed_area(moved[p], moved[q], moved[r]) == 0;
      if (!ok) ++cert.mismatches;
    }
  }

  // All four points on a line.
  long collinear_on = 0, collinear_off = 0;
  const long n_line = sample_count(opts, 400);
  for (long i = 0; i < n_line; ++i) {
    std::array<Point, 4> pts;
    for (auto& p : pts) p = pt(Rational(std::uniform_int_distribution<int>(-20, 20)(rng), std::uniform_int_distribution<int>(1, 3)(rng)), 0);
    for (auto& p : pts) p.x.canonicalize();
    QuadConfig cfg(pts[0], pts[1], pts[2], pts[3]);
    if (cfg.has_coincident_points()) continue;
    cfg = move_rigidly(cfg, rng);
    ++cert.samples;
    if (!all_areas_zero(cfg)) ++cert.mismatches;
    const DistSextuple& d = cfg.distances();
    const bool cond_zero = eval_condition(family, d).is_zero();
    if (r_family && cond_zero != eval_condition(ConditionId::P, d).is_zero()) ++cert.mismatches;
    if (!cond_zero) {
      ++collinear_off;
      continue;
    }
    ++collinear_on;
    for (EliminationTarget t : all_elimination_targets()) {
      const ClosedForm& form = closed_form(t);
      if (form.condition != family) continue;
      const auto m = closed_form_matches(form, cfg);
      if (m && !*m) ++cert.mismatches;
    }
  }

  cert.tier1 = "scheme identities: " + hull_list(lemma_lines);
  cert.tier2 = std::to_string(cert.samples) + " exact degenerate instances, " + std::to_string(cert.mismatches) +
               " mismatches; " + std::to_string(collinear_on) + " all-collinear instances on the condition (every " +
               "closed form of the family gives 0), " + std::to_string(collinear_off) + " off it";
  if (r_family) cert.notes.push_back("on four collinear points R = 0 exactly when P = 0");
  else cert.notes.push_back("a = b reduces to e = 2u through g1 and g2; c = d reduces to e = 2w through g3 and g4");
  cert.status = cert.mismatches == 0 ? CertStatus::supported : CertStatus::failed;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

// --------------------------------------------------------- reflection theorem

namespace {

bool reflected_rt_zero(const QuadConfig& cfg) {
  return eval_condition(ConditionId::R_T, reflect_over_line(cfg, Vertex::C, Vertex::B, Vertex::D).distances()).is_zero();
}

bool pt_qt_zero(const QuadConfig& cfg) {
  const DistSextuple& d = cfg.distances();
  return eval_condition(ConditionId::P_T, d).is_zero() || eval_condition(ConditionId::Q_T, d).is_zero();
}

}  // namespace

Certificate cert_reflection_theorem(const CertOptions& opts) {
  const auto start = Clock::now();
  Certificate cert;
  cert.claim = "reflection_theorem";
  Rng rng(opts.seed ^ 0x13198a2eULL);
  const long n = sample_count(opts, 500);

  long cyclic_bad = 0, acdb_bad = 0, kite_bad = 0, random_bad = 0, random_both = 0;
  for (long i = 0; i < n; ++i) {
    const QuadConfig cfg = gen_cyclic(rng, "ACBD");
    if (!eval_condition(ConditionId::Q_T, cfg.distances()).is_zero() || !reflected_rt_zero(cfg)) ++cyclic_bad;
  }
  for (long i = 0; i < n / 2; ++i) {
    const QuadConfig cfg = gen_cyclic(rng, "ACDB");
    if (!eval_condition(ConditionId::P_T, cfg.distances()).is_zero() || !reflected_rt_zero(cfg)) ++acdb_bad;
  }
  for (long i = 0; i < n; ++i) {
    const QuadConfig kite = gen_tilted_kite(rng, i % 2 == 0);
    // Reflecting C back over BD recovers the kite, so the reflected side holds.
    const QuadConfig folded = reflect_over_line(kite, Vertex::C, Vertex::B, Vertex::D);
    if (!reflected_rt_zero(folded) || !pt_qt_zero(folded)) ++kite_bad;
  }
  long random_n = 0;
  for (long i = 0; random_n < n && i < 100 * n; ++i) {
    const QuadConfig cfg = i % 5 == 4 ? gen_cyclic(rng, i % 10 == 4 ? "ACBD" : "ABCD") : gen_random(rng);
    if (cfg.has_coincident_points() || cfg.B() == cfg.D()) continue;
    ++random_n;
    const bool lhs = reflected_rt_zero(cfg), rhs = pt_qt_zero(cfg);
    if (lhs != rhs) ++random_bad;
    if (lhs && rhs) ++random_both;
  }
  cert.samples = n + n / 2 + n + random_n;
  cert.mismatches = cyclic_bad + acdb_bad + kite_bad + random_bad;
  std::ostringstream s;
  s << n << " cyclic ACBD (Q_T = 0, reflected R_T = 0): " << cyclic_bad << " violations; " << n / 2
    << " cyclic ACDB (P_T = 0, reflected R_T = 0): " << acdb_bad << " violations; " << n
    << " reflected tilted kites (P_T*Q_T = 0): " << kite_bad << " violations; " << random_n
    << " mixed configurations for the biconditional: " << random_bad << " violations, " << random_both
    << " with both sides true";
  cert.tier2 = s.str();
  cert.tier1 = "not applicable (sampling certificate)";
  cert.status = cert.mismatches == 0 ? CertStatus::supported : CertStatus::failed;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

// ----------------------------------------------------------------- hull tables

namespace {

Rational cross(const Point& o, const Point& p, const Point& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

bool same_cycle(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return false;
  return (x + x).find(y) != std::string::npos;
}

}  // namespace

HullClass hull_oracle(const QuadConfig& cfg) {
  if (cfg.has_coincident_points()) throw std::invalid_argument("coincident points");
  const auto& pts = cfg.points();
  const std::string names = "ABCD";
  auto triple_name = [&](int skip) {
    std::string out;
    for (int i = 0; i < 4; ++i)
      if (i != skip) out += names[i];
    return out;
  };
  int zero_triples = 0, collinear_skip = -1;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<int, 3> idx{};
    for (int i = 0, k = 0; i < 4; ++i)
      if (i != skip) idx[k++] = i;
    if (cross(pts[idx[0]], pts[idx[1]], pts[idx[2]]) == 0) {
      ++zero_triples;
      collinear_skip = skip;
    }
  }
  if (zero_triples == 4) return {HullClass::Kind::collinear4, "ABCD"};
  if (zero_triples == 1) return {HullClass::Kind::collinear3, triple_name(collinear_skip)};
  if (zero_triples > 1) throw std::logic_error("inconsistent collinearity");

  // A point strictly inside the triangle of the other three.
  for (int in = 0; in < 4; ++in) {
    std::array<int, 3> t{};
    for (int i = 0, k = 0; i < 4; ++i)
      if (i != in) t[k++] = i;
    const int s0 = sgn(cross(pts[t[0]], pts[t[1]], pts[in]));
    const int s1 = sgn(cross(pts[t[1]], pts[t[2]], pts[in]));
    const int s2 = sgn(cross(pts[t[2]], pts[t[0]], pts[in]));
    if (s0 == s1 && s1 == s2) {
      std::string tri{names[t[0]], names[t[1]], names[t[2]]};
      if (sgn(cross(pts[t[0]], pts[t[1]], pts[t[2]])) < 0) std::swap(tri[1], tri[2]);
      return {HullClass::Kind::concave3, tri, names[in]};
    }
  }
  // Convex: the diagonal from A separates the other two points.
  for (int opp = 1; opp < 4; ++opp) {
    std::array<int, 2> rest{};
    for (int i = 1, k = 0; i < 4; ++i)
      if (i != opp) rest[k++] = i;
    const int s0 = sgn(cross(pts[0], pts[opp], pts[rest[0]])), s1 = sgn(cross(pts[0], pts[opp], pts[rest[1]]));
    if (s0 != s1) {
      // Counterclockwise walk A -> (right of A->opp) -> opp -> (left).
      const int right = s0 < 0 ? rest[0] : rest[1], left = s0 < 0 ? rest[1] : rest[0];
      return {HullClass::Kind::convex4, std::string{'A', names[right], names[opp], names[left]}};
    }
  }
  throw std::logic_error("no separating diagonal");
}

bool same_hull(const HullClass& x, const HullClass& y) {
  return x.kind == y.kind && x.interior == y.interior &&
         (x.kind == HullClass::Kind::collinear3 || x.kind == HullClass::Kind::collinear4
              ? x.vertices == y.vertices
              : same_cycle(x.vertices, y.vertices));
}

Certificate cert_hull_tables(const CertOptions& opts) {
  const auto start = Clock::now();
  Certificate cert;
  cert.claim = "hull_tables";
  Rng rng(opts.seed ^ 0xa4093822ULL);
  const long n = sample_count(opts, 100000);
  std::uniform_int_distribution<int> small(-2, 2);
  std::map<std::string, long> seen;
  long forbidden = 0;
  for (long i = 0; cert.samples < n; ++i) {
    const QuadConfig cfg = [&] {
      if (i % 4 != 3) return gen_random(rng);
      std::array<Point, 4> p;
      for (auto& q : p) q = pt(small(rng), small(rng));
      return QuadConfig(p[0], p[1], p[2], p[3]);
    }();
    if (cfg.has_coincident_points()) continue;
    ++cert.samples;
    const SignedAreas s = signed_areas(cfg);
    const std::array<int, 4> sign{sgn(s.abc), sgn(s.abd), sgn(s.bcd), sgn(s.acd)};
    if (sign == std::array<int, 4>{1, -1, -1, 1} || sign == std::array<int, 4>{-1, 1, 1, -1}) {
      ++forbidden;
      ++cert.mismatches;
      continue;
    }
    const HullClass table = classify_hull(cfg);
    const HullClass oracle = hull_oracle(cfg);
    if (!same_hull(table, oracle)) ++cert.mismatches;
    ++seen[table.describe()];
  }
  std::ostringstream s;
  s << cert.samples << " configurations, " << cert.mismatches << " disagreements with the orientation oracle, "
    << forbidden << " unrealizable sign patterns; " << seen.size() << " distinct hull classes";
  cert.tier2 = s.str();
  cert.tier1 = "not applicable (sampling certificate)";
  cert.status = cert.mismatches == 0 ? CertStatus::supported : CertStatus::failed;
  cert.elapsed_ms = ms_since(start);
  return cert;
}

// ---------------------------------------------------------------- claim runner

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"converse_ptolemy"};
    for (EliminationTarget t : all_elimination_targets()) out.push_back(target_name(t));
    for (const char* n : {"parallelogram_case", "degenerate_R", "degenerate_R_T", "reflection_theorem", "hull_tables"})
      out.push_back(n);
    return out;
  }();
  return names;
}

Certificate run_claim(std::string_view name, const CertOptions& opts) {
  if (name == "converse_ptolemy") return cert_converse_ptolemy(opts);
  if (name == "parallelogram_case") return cert_parallelogram_case(opts);
  if (name == "degenerate_R") return cert_degenerate_cases(ConditionId::R, opts);
  if (name == "degenerate_R_T") return cert_degenerate_cases(ConditionId::R_T, opts);
  if (name == "reflection_theorem") return cert_reflection_theorem(opts);
  if (name == "hull_tables") return cert_hull_tables(opts);
  return cert_elimination_formula(parse_target(name), opts);
}

std::vector<Certificate> run_claims(const std::vector<std::string>& names, const CertOptions& opts, int jobs) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      expanded.insert(expanded.end(), claim_names().begin(), claim_names().end());
    } else if (std::find(claim_names().begin(), claim_names().end(), n) == claim_names().end()) {
      throw std::invalid_argument("unknown claim '" + n + "'");
    } else {
      expanded.push_back(n);
    }
  }
  std::vector<Certificate> out(expanded.size());
  std::vector<std::exception_ptr> errors(expanded.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < expanded.size();) {
      try {
        out[i] = run_claim(expanded[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int count = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(expanded.size(), 1)));
  std::vector<std::thread> pool;
  for (int j = 1; j < count; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace quadcert
