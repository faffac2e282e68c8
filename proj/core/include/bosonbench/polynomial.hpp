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

#ifndef BOSONBENCH_POLYNOMIAL_HPP
#define BOSONBENCH_POLYNOMIAL_HPP

#include <vector>

namespace bb {

/// Outcome probability as a polynomial in the pairwise indistinguishability
/// x: P(x) = sum_d coeffs[d] * x^d, degree n for an n-photon outcome. The
/// linear coefficient is identically zero (no permutation moves exactly one
/// photon), which doubles as a quick integrity check.
struct ProbabilityPolynomial {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Horner evaluation on the physical domain x in [0, 1]. Throws DomainError
/// outside the domain. Tiny negative results from rounding (within -1e-10)
/// clamp to zero; anything more negative escapes as-is so genuine model or
/// input errors stay visible.
double eval_poly(const ProbabilityPolynomial& poly, double x);

}  // namespace bb

#endif  // BOSONBENCH_POLYNOMIAL_HPP
