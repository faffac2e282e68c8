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

#include "bosonbench/combinatorics.hpp"

#include <algorithm>
#include <string>

#include "bosonbench/errors.hpp"
#include "bosonbench/rng.hpp"

namespace bb {

double binomial(int m, int n) {
  if (n < 0 || m < 0 || n > m) return 0.0;
  if (n > m - n) n = m - n;
  double r = 1.0;
  for (int i = 1; i <= n; ++i) {
    r *= static_cast<double>(m - n + i);
    r /= static_cast<double>(i);
  }
  return r;
}

std::uint64_t binomial_checked(int m, int n, std::uint64_t limit) {
  if (n < 0 || m < 0 || n > m) return 0;
  if (n > m - n) n = m - n;
  std::uint64_t r = 1;
  for (int i = 1; i <= n; ++i) {
    // r * (m - n + i) can overflow before the division; do the division
    // first on the gcd-free part by tracking via long double bound check.
    const std::uint64_t factor = static_cast<std::uint64_t>(m - n + i);
    if (r > (~std::uint64_t(0)) / factor) {
      throw SizeError("binomial(" + std::to_string(m) + ", " + std::to_string(n) +
                      ") overflows the outcome counter");
    }
    r = r * factor / static_cast<std::uint64_t>(i);
    if (r > limit) {
      throw SizeError("binomial(" + std::to_string(m) + ", " + std::to_string(n) +
                      ") exceeds the exact-enumeration limit of " + std::to_string(limit));
    }
  }
  return r;
}

std::vector<int> random_combination(int m, int n, Rng& rng) {
  if (n < 0 || n > m) throw DomainError("random combination needs 0 <= n <= m");
  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(n));
  for (int j = m - n; j < m; ++j) {
    const int t = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(j) + 1));
    if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
      picked.push_back(t);
    } else {
      picked.push_back(j);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace bb
