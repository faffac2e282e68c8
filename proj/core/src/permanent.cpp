// Copyright 2026 The bosonbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonbench/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "bosonbench/errors.hpp"

namespace bb {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.square()) throw DimensionError(std::string(what) + " needs a square matrix");
}

}  // namespace

Complex permanent_naive(const ComplexMatrix& m) {
  require_square(m, "permanent");
  const std::size_t n = m.rows();
  if (n == 0) return Complex(1.0, 0.0);
  if (n > 10) throw SizeError("naive permanent refuses n > 10, got n = " + std::to_string(n));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Complex total(0.0, 0.0);
  do {
    Complex prod(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Ryser with Gray-code column-subset enumeration:
//   perm(M) = (-1)^n * sum_{S != empty} (-1)^|S| prod_j sum_{k in S} M_jk.
// Each Gray step toggles one column in or out of every row sum, so a step
// costs O(n) and the product O(n), giving O(n * 2^n) total.
Complex permanent_ryser(const ComplexMatrix& m) {
  require_square(m, "permanent");
  const std::size_t n = m.rows();
  if (n == 0) return Complex(1.0, 0.0);
  if (n > 30) throw SizeError("Ryser permanent refuses n > 30, got n = " + std::to_string(n));

  using LC = std::complex<long double>;
  std::vector<LC> row_sum(n, LC(0.0L, 0.0L));
  LC total(0.0L, 0.0L);
  std::uint64_t gray = 0;
  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    const std::uint64_t next_gray = idx ^ (idx >> 1);
    const std::uint64_t diff = gray ^ next_gray;
    const std::size_t col = static_cast<std::size_t>(std::countr_zero(diff));
    const long double sign_col = (next_gray & diff) ? 1.0L : -1.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex& e = m.at(j, col);
      row_sum[j] += LC(sign_col * static_cast<long double>(e.real()),
                       sign_col * static_cast<long double>(e.imag()));
    }
    gray = next_gray;
    LC prod(1.0L, 0.0L);
    for (std::size_t j = 0; j < n; ++j) prod *= row_sum[j];
    const std::size_t popcount = static_cast<std::size_t>(std::popcount(gray));
    if ((n - popcount) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return Complex(static_cast<double>(total.real()), static_cast<double>(total.imag()));
}

double permanent_ryser_real(const RealMatrix& m) {
  if (!m.square()) throw DimensionError("permanent needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  if (n > 30) throw SizeError("Ryser permanent refuses n > 30, got n = " + std::to_string(n));

  std::vector<long double> row_sum(n, 0.0L);
  long double total = 0.0L;
  std::uint64_t gray = 0;
  const std::uint64_t count = std::uint64_t(1) << n;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    const std::uint64_t next_gray = idx ^ (idx >> 1);
    const std::uint64_t diff = gray ^ next_gray;
    const std::size_t col = static_cast<std::size_t>(std::countr_zero(diff));
    const long double sign_col = (next_gray & diff) ? 1.0L : -1.0L;
    for (std::size_t j = 0; j < n; ++j) {
      row_sum[j] += sign_col * static_cast<long double>(m.at(j, col));
    }
    gray = next_gray;
    long double prod = 1.0L;
    for (std::size_t j = 0; j < n; ++j) prod *= row_sum[j];
    const std::size_t popcount = static_cast<std::size_t>(std::popcount(gray));
    if ((n - popcount) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return static_cast<double>(total);
}

Complex permanent(const ComplexMatrix& m) {
  require_square(m, "permanent");
  return m.rows() <= 4 ? permanent_naive(m) : permanent_ryser(m);
}

double distinguishable_probability(const ComplexMatrix& m) {
  const double p = permanent_ryser_real(abs_squared(m));
  return p < 0.0 ? 0.0 : p;
}

}  // namespace bb
