// Copyright 2026 The gcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gcluster {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Products and reductions go through the
// runtime-selected kernels (see kernels.hpp).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  // rows x cols zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  // Throws InvalidArgument on a size mismatch or a non-finite entry.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<cplx> entries() noexcept { return data_; }
  std::span<const cplx> entries() const noexcept { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix real_part() const;
  ComplexMatrix imag_part() const;
  // (M + M^T) / 2 and (M + M^dagger) / 2.
  ComplexMatrix symmetric_part() const;
  ComplexMatrix hermitian_part() const;

  ComplexMatrix block(std::size_t row, std::size_t col, std::size_t nrows,
                      std::size_t ncols) const;
  void set_block(std::size_t row, std::size_t col, const ComplexMatrix& m);

  // D * M and M * D for diagonal D given by its entries.
  ComplexMatrix scale_rows(std::span<const cplx> d) const;
  ComplexMatrix scale_cols(std::span<const cplx> d) const;

  double max_abs() const;
  double frobenius() const;
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_imag() const;

  // Max-entry residuals of the defining identities.
  double symmetry_residual() const;
  double hermiticity_residual() const;
  double unitarity_residual() const;
  double orthogonality_residual() const;  // unitary and real

  bool is_symmetric(double tol) const { return symmetry_residual() <= tol; }
  bool is_hermitian(double tol) const { return hermiticity_residual() <= tol; }
  bool is_unitary(double tol) const { return unitarity_residual() <= tol; }
  bool is_real(double tol) const { return max_imag() <= tol; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

// a + s * I
ComplexMatrix add_identity(const ComplexMatrix& a, cplx s);

}  // namespace gcluster
