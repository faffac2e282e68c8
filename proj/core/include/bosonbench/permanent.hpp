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

#ifndef BOSONBENCH_PERMANENT_HPP
#define BOSONBENCH_PERMANENT_HPP

#include "bosonbench/matrix.hpp"

namespace bb {

/// Permanent by direct permutation sum. O(n! * n); refuses n > 10. Kept as a
/// cross-check for the Ryser implementation.
Complex permanent_naive(const ComplexMatrix& m);

/// Permanent via Ryser's formula with Gray-code subset updates, O(n * 2^n).
/// Row sums accumulate in long double to soften the alternating-sum
/// cancellation. Refuses n > 30. permanent(0x0 matrix) = 1 by convention.
Complex permanent_ryser(const ComplexMatrix& m);

/// Ryser on a real matrix. Used for Gram-type matrices whose permanent is
/// real by construction.
double permanent_ryser_real(const RealMatrix& m);

/// Dispatches to the naive sum for n <= 4 and Ryser above (the crossover is
/// in the noise; this mainly keeps tiny cases cheap).
Complex permanent(const ComplexMatrix& m);

/// Probability of a collision-free outcome for fully distinguishable
/// photons: the permanent of the |entry|^2 matrix. Clamped to >= 0 against
/// rounding in the alternating sum.
double distinguishable_probability(const ComplexMatrix& m);

}  // namespace bb

#endif  // BOSONBENCH_PERMANENT_HPP
