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

#ifndef BOSONBENCH_SAMPLES_HPP
#define BOSONBENCH_SAMPLES_HPP

#include <cstddef>
#include <vector>

namespace bb {

/// One collision-free detection event: the sorted, distinct output modes
/// that fired. Lexicographic vector order makes patterns usable as map keys.
using OutputPattern = std::vector<int>;

/// An ordered list of detection events from one device configuration.
/// Duplicates are expected (the same outcome observed repeatedly).
struct SampleSet {
  int n = 0;
  int m = 0;
  std::vector<OutputPattern> patterns;

  std::size_t size() const { return patterns.size(); }

  /// Throws unless every pattern is strictly increasing, has length n, and
  /// stays below m.
  void validate() const;
};

}  // namespace bb

#endif  // BOSONBENCH_SAMPLES_HPP
