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

#include "bosonbench/samples.hpp"

#include <string>

#include "bosonbench/errors.hpp"

namespace bb {

void SampleSet::validate() const {
  if (n < 1) throw DomainError("sample set needs photon count n >= 1");
  if (m < n) throw DomainError("sample set needs at least n modes");
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const OutputPattern& p = patterns[i];
    if (p.size() != static_cast<std::size_t>(n)) {
      throw DomainError("sample " + std::to_string(i + 1) + " has " + std::to_string(p.size()) +
                        " detections, expected " + std::to_string(n));
    }
    int prev = -1;
    for (int mode : p) {
      if (mode < 0 || mode >= m) {
        throw BoundsError("sample " + std::to_string(i + 1) + " references mode " +
                          std::to_string(mode) + " outside [0, " + std::to_string(m) + ")");
      }
      if (mode == prev) {
        throw DomainError("sample " + std::to_string(i + 1) +
                          " contains a collision on mode " + std::to_string(mode));
      }
      if (mode < prev) {
        throw DomainError("sample " + std::to_string(i + 1) + " is not sorted ascending");
      }
      prev = mode;
    }
  }
}

}  // namespace bb
