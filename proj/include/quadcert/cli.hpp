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

#ifndef QUADCERT_CLI_HPP
#define QUADCERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quadcert/certificates.hpp"
#include "quadcert/conditions.hpp"
#include "quadcert/generators.hpp"
#include "quadcert/io.hpp"

namespace quadcert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitFailed = 2;

// Hull (for point input), CM, every condition with its exact value and sign,
// the two angle witnesses and the verdicts. Accepts a QuadConfig or a
// DistSextuple document.
Json classify_report(const Json& input);
std::string classify_text(const Json& report);

// One row per identity in the group ("all", "base", "tilted", "symmetric").
Json identities_report(std::string_view group, const ConditionTable& table = ConditionTable::standard());

std::string prove_summary(const std::vector<Certificate>& certs, bool include_timing);

// Families: cyclic (order ABCD unless given), tilted_kite, folded, reflected.
QuadConfig generate_one(std::string_view family, Rng& rng, bool concave = false, std::string_view order = "ABCD");
Json generation_record(std::string_view family, long index, const QuadConfig& cfg);

// Full command line, argv[0] excluded. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quadcert

#endif  // QUADCERT_CLI_HPP
