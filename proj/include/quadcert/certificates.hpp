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

#ifndef QUADCERT_CERTIFICATES_HPP
#define QUADCERT_CERTIFICATES_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quadcert/conditions.hpp"
#include "quadcert/geometry.hpp"
#include "quadcert/groebner.hpp"
#include "quadcert/io.hpp"

namespace quadcert {

// -------------------------------------------------------- coordinate schemes

enum class SchemeKind { ptolemy, r_scheme, t_scheme };

/// Coordinates pinning two or three vertices to the axes, plus the five
/// distance generators in the order they are listed alongside each scheme.
///   ptolemy:  A=(0,0) B=(a,0) C=(u,v) D=(w,z)   generators f1..f5
///   r_scheme: A=(u,v) B=(f,0) C=(w,z) D=(0,0)   generators h1..h5
///   t_scheme: A=(0,0) B=(u,v) C=(e,0) D=(w,z)   generators g1..g5
struct CoordinateScheme {
  SchemeKind kind;
  std::string name;
  VarSet vars;  // a b c d e f u v w z
  std::array<std::array<Polynomial, 2>, 4> points;
  std::vector<Polynomial> generators;

  Polynomial delta(Vertex p, Vertex q, Vertex r) const;
  Polynomial cocircularity() const;
  Polynomial condition(ConditionId id) const;  // embedded into vars
};

const CoordinateScheme& coordinate_scheme(SchemeKind kind);

// ------------------------------------------------------------ certificates

enum class CertStatus { certified, supported, tier2_only, inconclusive, failed };
std::string status_name(CertStatus s);  // CERTIFIED, SUPPORTED, TIER2-ONLY, INCONCLUSIVE, FAILED

struct Certificate {
  std::string claim;
  std::vector<std::string> ideal;
  std::string order;
  std::vector<std::string> reduced_basis;  // or the eliminated polynomial(s)
  double elapsed_ms = 0;
  CertStatus status = CertStatus::inconclusive;
  std::string tier1;  // symbolic outcome summary
  std::string tier2;  // sampling outcome summary
  long samples = 0;
  long mismatches = 0;
  std::vector<std::string> notes;

  Json to_json(bool include_timing = true) const;
};

struct CertOptions {
  std::uint64_t seed = 1;
  // Budget per Groebner run; zero skips the symbolic tier.
  std::chrono::milliseconds timeout = std::chrono::seconds(600);
  // Symbolic tier of cert_elimination_formula by full elimination of the
  // scheme variables instead of radical membership of the closed form.
  bool eliminate = false;
  // Overrides the default sample count of every sampling tier when >= 0.
  long samples = -1;
};

Certificate cert_converse_ptolemy(const CertOptions& opts = {});

enum class EliminationTarget { N_ptolemy, M_ptolemy, N_R, ABD_R, BCD_R, M_T, ABD_T, BCD_T, ABC_T, ACD_T };
const std::vector<EliminationTarget>& all_elimination_targets();
std::string target_name(EliminationTarget t);
EliminationTarget parse_target(std::string_view name);

/// A signed-area quantity and its closed form num/den in a, b, c, d. For
/// the square-root forms the quantity is the squared area and the closed
/// form its square.
struct ClosedForm {
  EliminationTarget target;
  SchemeKind scheme;
  ConditionId condition;
  std::vector<std::array<Vertex, 3>> areas;  // product of these signed areas
  bool squared;
  std::vector<std::string> numerator;    // factors
  std::vector<std::string> denominator;  // factors
  int sign_claim;                        // +1: value >= 0, -1: value <= 0, 0: none
  std::string slack;
};
const ClosedForm& closed_form(EliminationTarget t);

// Exact closed-form check on one configuration; nullopt when the
// denominator vanishes there.
std::optional<bool> closed_form_matches(const ClosedForm& form, const QuadConfig& cfg);

Certificate cert_elimination_formula(EliminationTarget target, const CertOptions& opts = {});
Certificate cert_parallelogram_case(const CertOptions& opts = {});
Certificate cert_degenerate_cases(ConditionId family, const CertOptions& opts = {});  // R or R_T
Certificate cert_reflection_theorem(const CertOptions& opts = {});
Certificate cert_hull_tables(const CertOptions& opts = {});

/// Convex hull by direct orientation tests, independent of the sign table.
/// Throws std::invalid_argument on coincident points.
HullClass hull_oracle(const QuadConfig& cfg);
// Same kind, same interior point, boundary equal up to rotation.
bool same_hull(const HullClass& x, const HullClass& y);

// Claim names accepted by run_claims: converse_ptolemy, the target names,
// parallelogram_case, degenerate_R, degenerate_R_T, reflection_theorem,
// hull_tables; "all" expands to every one of them.
const std::vector<std::string>& claim_names();
Certificate run_claim(std::string_view name, const CertOptions& opts);
// Runs claims on up to `jobs` threads; results keep the requested order.
std::vector<Certificate> run_claims(const std::vector<std::string>& names, const CertOptions& opts, int jobs = 1);

}  // namespace quadcert

#endif  // QUADCERT_CERTIFICATES_HPP
