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

#include "bosonbench/haar.hpp"

#include <Eigen/Dense>
#include <complex>

#include "bosonbench/errors.hpp"
#include "bosonbench/rng.hpp"

namespace bb {

ComplexMatrix haar_unitary(std::size_t m, std::uint64_t seed) {
  if (m == 0) throw DomainError("unitary dimension must be positive");
  Rng rng(seed);
  Eigen::MatrixXcd g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::complex<double>(rng.gaussian(), rng.gaussian());
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: divide each Q column by the phase of the matching R
  // diagonal, otherwise the distribution is not Haar.
  for (std::size_t j = 0; j < m; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    std::complex<double> d = r(jj, jj);
    const double mag = std::abs(d);
    const std::complex<double> phase = (mag > 0.0) ? d / mag : std::complex<double>(1.0, 0.0);
    q.col(jj) /= phase;
  }
  ComplexMatrix u(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      u.at(i, j) = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return u;
}

}  // namespace bb
