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

// Test-side helpers. The permanent oracle here is deliberately independent
// of the library implementations: a plain permutation sum over index
// vectors, kept as naive as possible.

#ifndef BOSONBENCH_TESTS_SUPPORT_HPP
#define BOSONBENCH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bosonbench/combinatorics.hpp"
#include "bosonbench/matrix.hpp"
#include "bosonbench/model.hpp"
#include "bosonbench/polynomial.hpp"
#include "bosonbench/rng.hpp"
#include "bosonbench/samples.hpp"

namespace bbtest {

/// Permanent by definition: sum over all permutations of products of
/// matrix entries. O(n! * n), usable to n = 9 or so.
inline bb::Complex oracle_permanent(const bb::ComplexMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return bb::Complex(1.0, 0.0);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  bb::Complex total(0.0, 0.0);
  do {
    bb::Complex prod(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) prod *= m.at(i, idx[i]);
    total += prod;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

/// Random dense complex matrix with i.i.d. Gaussian entries of the given
/// scale per component.
inline bb::ComplexMatrix random_matrix(std::size_t n, bb::Rng& rng, double scale) {
  bb::ComplexMatrix m(n, n);
  for (bb::Complex& z : m.data()) {
    z = bb::Complex(scale * rng.gaussian(), scale * rng.gaussian());
  }
  return m;
}

/// Exact collision-free outcome distribution P_i(x) / N(x) over all
/// patterns, by full enumeration.
inline std::map<bb::OutputPattern, double> exact_distribution(const bb::TransmissionMatrix& u,
                                                              const std::vector<int>& inputs,
                                                              double x) {
  std::map<bb::OutputPattern, double> probs;
  double total = 0.0;
  bb::for_each_combination(static_cast<int>(u.rows()), static_cast<int>(inputs.size()),
                           [&](const std::vector<int>& pattern) {
                             const double p = std::max(
                                 0.0, bb::eval_poly(
                                          bb::outcome_poly(bb::submatrix_columns(u, inputs,
                                                                                 pattern)),
                                          x));
                             probs[pattern] = p;
                             total += p;
                           });
  for (auto& [pattern, p] : probs) p /= total;
  return probs;
}

/// Total variation distance between a sample set's empirical distribution
/// and a reference distribution over the same pattern space.
inline double tvd(const bb::SampleSet& samples, const std::map<bb::OutputPattern, double>& probs) {
  std::map<bb::OutputPattern, double> freq;
  const double w = 1.0 / static_cast<double>(samples.size());
  for (const bb::OutputPattern& p : samples.patterns) freq[p] += w;
  double d = 0.0;
  for (const auto& [pattern, p] : probs) {
    const auto it = freq.find(pattern);
    d += std::abs((it == freq.end() ? 0.0 : it->second) - p);
  }
  for (const auto& [pattern, f] : freq) {
    if (probs.find(pattern) == probs.end()) d += f;
  }
  return 0.5 * d;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Scratch directory removed on destruction.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    static std::uint64_t counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("bosonbench-" + tag + "-" + std::to_string(++counter) + "-" +
            std::to_string(static_cast<std::uint64_t>(
                std::hash<std::string>{}(std::filesystem::current_path().string()))));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace bbtest

#endif  // BOSONBENCH_TESTS_SUPPORT_HPP
