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

#include "bosonbench/matrix.hpp"

#include <cmath>
#include <string>

#include "bosonbench/errors.hpp"

namespace bb {

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

namespace {

void check_mode_list(const std::vector<int>& modes, std::size_t m, const char* which) {
  int prev = -1;
  for (int mode : modes) {
    if (mode < 0 || static_cast<std::size_t>(mode) >= m) {
      throw BoundsError(std::string(which) + " mode " + std::to_string(mode) +
                        " out of range for " + std::to_string(m) + " modes");
    }
    if (mode <= prev) {
      throw DomainError(std::string(which) + " modes must be strictly increasing");
    }
    prev = mode;
  }
}

}  // namespace

void ModeSelection::validate(std::size_t m) const {
  if (input_modes.size() != output_modes.size()) {
    throw DimensionError("mode selection has " + std::to_string(input_modes.size()) +
                         " input modes but " + std::to_string(output_modes.size()) +
                         " output modes");
  }
  if (input_modes.empty()) {
    throw DomainError("mode selection must contain at least one photon");
  }
  check_mode_list(input_modes, m, "input");
  check_mode_list(output_modes, m, "output");
}

void validate_modes(const ComplexMatrix& u, const std::vector<int>& modes) {
  if (!u.square()) throw DimensionError("transmission matrix must be square");
  if (modes.empty()) throw DomainError("mode list must contain at least one mode");
  check_mode_list(modes, u.rows(), "input");
}

RealMatrix abs_squared(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.at(i, j) = std::norm(m.at(i, j));
    }
  }
  return out;
}

double unitarity_deviation(const ComplexMatrix& u) {
  if (!u.square()) throw DimensionError("unitarity deviation needs a square matrix");
  const std::size_t m = u.rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex g(0.0, 0.0);
      for (std::size_t k = 0; k < m; ++k) {
        g += std::conj(u.at(k, i)) * u.at(k, j);
      }
      if (i == j) g -= Complex(1.0, 0.0);
      sum += std::norm(g);
    }
  }
  return std::sqrt(sum);
}

ComplexMatrix submatrix(const TransmissionMatrix& u, const ModeSelection& sel) {
  if (!u.square()) throw DimensionError("transmission matrix must be square");
  sel.validate(u.rows());
  return submatrix_columns(u, sel.input_modes, sel.output_modes);
}

ComplexMatrix submatrix_columns(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                const std::vector<int>& output_columns) {
  if (inputs.size() != output_columns.size()) {
    throw DimensionError("submatrix needs equally many input rows and output columns");
  }
  const std::size_t n = inputs.size();
  ComplexMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t row = static_cast<std::size_t>(inputs[j]);
    if (row >= u.rows()) throw BoundsError("input mode out of range");
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t col = static_cast<std::size_t>(output_columns[k]);
      if (col >= u.cols()) throw BoundsError("output mode out of range");
      m.at(j, k) = u.at(row, col);
    }
  }
  return m;
}

}  // namespace bb
