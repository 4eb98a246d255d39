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

#ifndef QUADCERT_DETERMINANT_HPP
#define QUADCERT_DETERMINANT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace quadcert {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Cofactor expansion along the first row. Exponential, but only ever used up
// to 5x5, and it needs nothing beyond ring operations, so the same code
// serves Rational and Polynomial entries.
template <typename T>
T determinant(const Matrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T total = m[0][0] - m[0][0];  // zero of the entry ring
  Matrix<T> minor(n - 1, std::vector<T>(n - 1, total));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != col) minor[r - 1][k++] = m[r][c];
    T term = m[0][col] * determinant(minor);
    if (col % 2) total = total - term;
    else total = total + term;
  }
  return total;
}

}  // namespace quadcert

#endif  // QUADCERT_DETERMINANT_HPP
