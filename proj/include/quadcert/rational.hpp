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

#ifndef QUADCERT_RATIONAL_HPP
#define QUADCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadcert {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every construction path calls canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q"; throws std::invalid_argument on anything else
// (including a zero denominator).
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace quadcert

#endif  // QUADCERT_RATIONAL_HPP
