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

#ifndef BOSONBENCH_MODEL_HPP
#define BOSONBENCH_MODEL_HPP

#include <vector>

#include "bosonbench/matrix.hpp"
#include "bosonbench/polynomial.hpp"

namespace bb {

/// Partial-distinguishability model where every photon pair shares the same
/// wavefunction overlap x. The pairwise Gram matrix is then
/// S_jk = x + (1 - x) * delta_jk, so an outcome probability is a degree-n
/// polynomial in x.
struct OverlapModel {
  double x = 1.0;
  int n = 0;

  void validate() const;
};

/// The n x n Gram matrix S for the model: ones on the diagonal, x elsewhere.
RealMatrix gram_matrix(const OverlapModel& model);

/// One permutation's contribution to the outcome probability:
/// Perm(A(sigma)) with A(sigma)_jk = conj(M_jk) * M_{sigma(j),k}.
///
/// With this convention the identity permutation gives Perm(|M|^2) and the
/// two-photon swap on a balanced splitter gives -1/2, reproducing the
/// Hong-Ou-Mandel dip P(x) = (1 - x^2)/2.
Complex permutation_term(const ComplexMatrix& m, const std::vector<int>& sigma);

/// Outcome probability as a polynomial in x, by direct enumeration of all
/// n! permutations grouped by fixed-point count:
///   c_k = sum over sigma with n - fix(sigma) = k of Re(permutation_term).
/// Exact coefficients; c_1 is identically zero because no permutation moves
/// exactly one element. Imaginary parts must cancel pairwise (sigma vs
/// sigma^-1) and are checked to 1e-10. Refuses n > 9; use outcome_poly_fast
/// beyond that.
ProbabilityPolynomial outcome_poly(const ComplexMatrix& m);

/// Same coefficients through a double subset sum instead of the n!
/// enumeration:
///   P(x) = sum over nonempty S,T of (-1)^(|S|+|T|) prod_j f_j(S,T),
///   f_j = x * sum_{a in S} W(T)_ja + (1-x) * [j in S] * W(T)_jj,
///   W(T)_ja = sum_{b in T} conj(M_jb) * M_ab.
/// Both subset loops walk Gray codes, so W updates cost O(n^2) and the inner
/// row sums O(n); expanding the product of n linear factors costs O(n^2) per
/// subset pair, for O(n^2 * 4^n) total. Refuses n > 20.
ProbabilityPolynomial outcome_poly_fast(const ComplexMatrix& m);

/// Outcome polynomial for a pattern that may place several photons in one
/// output mode: repeated output columns, divided by the multiset factor
/// prod_k s_k! over output multiplicities. Exists to support the
/// completeness check and the exact sampler; the estimation path never
/// scores collision events.
ProbabilityPolynomial outcome_poly_collision(const TransmissionMatrix& u,
                                             const std::vector<int>& inputs,
                                             const std::vector<int>& outputs_with_repeats);

}  // namespace bb

#endif  // BOSONBENCH_MODEL_HPP
