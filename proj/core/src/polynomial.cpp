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

#include "bosonbench/polynomial.hpp"

#include <string>

#include "bosonbench/errors.hpp"

namespace bb {

double eval_poly(const ProbabilityPolynomial& poly, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("indistinguishability x must lie in [0, 1], got " + std::to_string(x));
  }
  if (poly.coeffs.empty()) throw DomainError("cannot evaluate an empty polynomial");
  double v = 0.0;
  for (std::size_t i = poly.coeffs.size(); i-- > 0;) {
    v = v * x + poly.coeffs[i];
  }
  if (v < 0.0 && v >= -1e-10) v = 0.0;
  return v;
}

}  // namespace bb
