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

#ifndef BOSONBENCH_COMBINATORICS_HPP
#define BOSONBENCH_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace bb {

class Rng;

/// binom(m, n) as a double. Exact for values below 2^53; larger counts only
/// feed Monte Carlo scale factors where the ~1e-16 relative rounding is
/// irrelevant.
double binomial(int m, int n);

/// binom(m, n), throwing SizeError when the count exceeds limit. Used to
/// guard exact outcome enumeration.
std::uint64_t binomial_checked(int m, int n, std::uint64_t limit);

/// Visits all strictly increasing n-subsets of {0..m-1} in lexicographic
/// order. The callback receives the current subset; it must not keep the
/// reference beyond the call.
template <typename Fn>
void for_each_combination(int m, int n, Fn&& fn) {
  if (n <= 0 || n > m) return;
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(c));
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

/// Uniform random n-subset of {0..m-1}, returned sorted ascending.
/// Floyd's algorithm: n draws regardless of m.
std::vector<int> random_combination(int m, int n, Rng& rng);

}  // namespace bb

#endif  // BOSONBENCH_COMBINATORICS_HPP
