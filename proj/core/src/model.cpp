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

#include "bosonbench/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "bosonbench/errors.hpp"
#include "bosonbench/permanent.hpp"

namespace bb {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.square()) throw DimensionError(std::string(what) + " needs a square matrix");
}

void check_imag_cancellation(const std::vector<long double>& imag) {
  for (long double v : imag) {
    if (std::abs(static_cast<double>(v)) > 1e-10) {
      throw Error("imaginary parts of the outcome polynomial failed to cancel (" +
                  std::to_string(static_cast<double>(v)) + "); input matrix is likely corrupt");
    }
  }
}

ProbabilityPolynomial poly_by_permutations(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  ProbabilityPolynomial poly;
  poly.coeffs.assign(n + 1, 0.0);
  if (n == 0) {
    poly.coeffs[0] = 1.0;
    return poly;
  }

  std::vector<long double> real(n + 1, 0.0L);
  std::vector<long double> imag(n + 1, 0.0L);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  ComplexMatrix a(n, n);
  do {
    std::size_t moved = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sigma[j] != static_cast<int>(j)) ++moved;
      const std::size_t sj = static_cast<std::size_t>(sigma[j]);
      for (std::size_t k = 0; k < n; ++k) {
        a.at(j, k) = std::conj(m.at(j, k)) * m.at(sj, k);
      }
    }
    const Complex term = permanent(a);
    real[moved] += static_cast<long double>(term.real());
    imag[moved] += static_cast<long double>(term.imag());
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  check_imag_cancellation(imag);
  for (std::size_t k = 0; k <= n; ++k) poly.coeffs[k] = static_cast<double>(real[k]);
  return poly;
}

}  // namespace

void OverlapModel::validate() const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("overlap x must lie in [0, 1], got " + std::to_string(x));
  }
  if (n < 1) throw DomainError("photon count must be positive");
}

RealMatrix gram_matrix(const OverlapModel& model) {
  model.validate();
  const std::size_t n = static_cast<std::size_t>(model.n);
  RealMatrix s(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      s.at(j, k) = (j == k) ? 1.0 : model.x;
    }
  }
  return s;
}

Complex permutation_term(const ComplexMatrix& m, const std::vector<int>& sigma) {
  require_square(m, "permutation term");
  const std::size_t n = m.rows();
  if (sigma.size() != n) throw DimensionError("permutation length does not match matrix size");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("sigma is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  ComplexMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t sj = static_cast<std::size_t>(sigma[j]);
    for (std::size_t k = 0; k < n; ++k) {
      a.at(j, k) = std::conj(m.at(j, k)) * m.at(sj, k);
    }
  }
  return permanent(a);
}

ProbabilityPolynomial outcome_poly(const ComplexMatrix& m) {
  require_square(m, "outcome polynomial");
  if (m.rows() > 9) {
    throw SizeError("outcome_poly enumerates all n! permutations and refuses n > 9 (got n = " +
                    std::to_string(m.rows()) + "); use outcome_poly_fast");
  }
  return poly_by_permutations(m);
}

ProbabilityPolynomial outcome_poly_fast(const ComplexMatrix& m) {
  require_square(m, "outcome polynomial");
  const std::size_t n = m.rows();
  if (n > 20) {
    throw SizeError("outcome_poly_fast refuses n > 20, got n = " + std::to_string(n));
  }
  ProbabilityPolynomial poly;
  poly.coeffs.assign(n + 1, 0.0);
  if (n == 0) {
    poly.coeffs[0] = 1.0;
    return poly;
  }

  using LC = std::complex<long double>;
  std::vector<LC> accum(n + 1, LC(0.0L, 0.0L));

  // W(T)_ja = sum_{b in T} conj(M_jb) * M_ab, maintained across Gray toggles
  // of T. g[j] = sum_{a in S} W_ja is rebuilt by the inner Gray walk over S.
  std::vector<LC> w(n * n, LC(0.0L, 0.0L));
  std::vector<LC> g(n, LC(0.0L, 0.0L));
  std::vector<LC> prod(n + 1, LC(0.0L, 0.0L));

  const std::uint64_t count = std::uint64_t(1) << n;
  std::uint64_t gray_t = 0;
  for (std::uint64_t it = 1; it < count; ++it) {
    const std::uint64_t next_t = it ^ (it >> 1);
    const std::uint64_t diff_t = gray_t ^ next_t;
    const std::size_t b = static_cast<std::size_t>(std::countr_zero(diff_t));
    const long double sgn_t = (next_t & diff_t) ? 1.0L : -1.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const LC cj(static_cast<long double>(m.at(j, b).real()),
                  -static_cast<long double>(m.at(j, b).imag()));
      for (std::size_t a = 0; a < n; ++a) {
        const LC ma(static_cast<long double>(m.at(a, b).real()),
                    static_cast<long double>(m.at(a, b).imag()));
        w[j * n + a] += sgn_t * cj * ma;
      }
    }
    gray_t = next_t;
    const int par_t = std::popcount(gray_t) & 1;

    std::fill(g.begin(), g.end(), LC(0.0L, 0.0L));
    std::uint64_t gray_s = 0;
    for (std::uint64_t is = 1; is < count; ++is) {
      const std::uint64_t next_s = is ^ (is >> 1);
      const std::uint64_t diff_s = gray_s ^ next_s;
      const std::size_t a = static_cast<std::size_t>(std::countr_zero(diff_s));
      const long double sgn_s = (next_s & diff_s) ? 1.0L : -1.0L;
      for (std::size_t j = 0; j < n; ++j) g[j] += sgn_s * w[j * n + a];
      gray_s = next_s;

      // f_j(x) = c1_j * x + c0_j with c0_j = [j in S] * W_jj and
      // c1_j = g_j - c0_j; expand prod_j f_j degree by degree.
      prod[0] = LC(1.0L, 0.0L);
      std::size_t deg = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const bool in_s = (gray_s >> j) & 1;
        const LC c0 = in_s ? w[j * n + j] : LC(0.0L, 0.0L);
        const LC c1 = g[j] - c0;
        prod[deg + 1] = prod[deg] * c1;
        for (std::size_t d = deg; d > 0; --d) {
          prod[d] = prod[d] * c0 + prod[d - 1] * c1;
        }
        prod[0] *= c0;
        ++deg;
      }
      const int par = (std::popcount(gray_s) + par_t) & 1;
      const long double sign = par ? -1.0L : 1.0L;
      for (std::size_t d = 0; d <= n; ++d) accum[d] += sign * prod[d];
    }
  }

  std::vector<long double> imag(n + 1);
  for (std::size_t d = 0; d <= n; ++d) imag[d] = accum[d].imag();
  check_imag_cancellation(imag);
  for (std::size_t d = 0; d <= n; ++d) poly.coeffs[d] = static_cast<double>(accum[d].real());
  return poly;
}

ProbabilityPolynomial outcome_poly_collision(const TransmissionMatrix& u,
                                             const std::vector<int>& inputs,
                                             const std::vector<int>& outputs_with_repeats) {
  if (inputs.size() != outputs_with_repeats.size()) {
    throw DimensionError("collision outcome needs one output slot per photon");
  }
  const std::size_t n = inputs.size();
  if (n > 9) {
    throw SizeError("collision outcome polynomial refuses n > 9, got n = " + std::to_string(n));
  }
  std::vector<int> outs = outputs_with_repeats;
  std::sort(outs.begin(), outs.end());
  const ComplexMatrix m = submatrix_columns(u, inputs, outs);
  ProbabilityPolynomial poly = poly_by_permutations(m);

  double multiset = 1.0;
  std::size_t i = 0;
  while (i < outs.size()) {
    std::size_t run = 1;
    while (i + run < outs.size() && outs[i + run] == outs[i]) ++run;
    for (std::size_t f = 2; f <= run; ++f) multiset *= static_cast<double>(f);
    i += run;
  }
  for (double& c : poly.coeffs) c /= multiset;
  return poly;
}

}  // namespace bb
