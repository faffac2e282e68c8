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

#ifndef BOSONBENCH_MATRIX_HPP
#define BOSONBENCH_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace bb {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. The photon-counting regime keeps n tiny
/// (a few tens of modes at most), so there is no sparse or blocked storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const Complex* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

  /// True when every entry is finite (no NaN or Inf component).
  bool all_finite() const;

  bool operator==(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Dense row-major real matrix, used for overlap (Gram) matrices and
/// elementwise |.|^2 images of complex matrices.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const double& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// The measured interferometer matrix U is an ordinary complex m x m matrix;
/// measured matrices need not be exactly unitary.
using TransmissionMatrix = ComplexMatrix;

/// A collision-free routing: which input modes carry photons and which output
/// modes are observed. Both lists are strictly increasing and equally long.
struct ModeSelection {
  std::vector<int> input_modes;
  std::vector<int> output_modes;

  std::size_t photon_count() const { return input_modes.size(); }

  /// Throws BoundsError / DomainError if the selection is not a valid
  /// collision-free routing for an m-mode matrix.
  void validate(std::size_t m) const;
};

/// Validates a strictly increasing in-range mode list against a square
/// m x m matrix. Used for the --inputs list shared by several entry points.
void validate_modes(const ComplexMatrix& u, const std::vector<int>& modes);

/// Entrywise |u_ij|^2.
RealMatrix abs_squared(const ComplexMatrix& m);

/// Frobenius norm of U^H U - I. Zero for exactly unitary U; measured
/// matrices report their deviation as a diagnostic.
double unitarity_deviation(const ComplexMatrix& u);

/// Extracts the n x n submatrix M with M[j][k] = U[input_modes[j],
/// output_modes[k]]. Row j belongs to photon j, column k to detection mode k.
ComplexMatrix submatrix(const TransmissionMatrix& u, const ModeSelection& sel);

/// Same extraction but the output column list may contain repeats; used for
/// collision outcomes where one detector mode would receive several photons.
ComplexMatrix submatrix_columns(const TransmissionMatrix& u, const std::vector<int>& inputs,
                                const std::vector<int>& output_columns);

}  // namespace bb

#endif  // BOSONBENCH_MATRIX_HPP
