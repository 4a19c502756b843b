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

#include "gcluster/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcluster/error.hpp"
#include "gcluster/kernels.hpp"

namespace gcluster {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs a square matrix");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::InvalidArgument, "entry count does not match shape");
  }
  for (const cplx& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::InvalidArgument, "ragged initializer list");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  for (const cplx& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix t(*this);
  for (cplx& v : t.data_) v = std::conj(v);
  return t;
}

ComplexMatrix ComplexMatrix::real_part() const {
  ComplexMatrix t(*this);
  for (cplx& v : t.data_) v = v.real();
  return t;
}

ComplexMatrix ComplexMatrix::imag_part() const {
  ComplexMatrix t(*this);
  for (cplx& v : t.data_) v = v.imag();
  return t;
}

ComplexMatrix ComplexMatrix::symmetric_part() const {
  require_square(*this, "symmetric_part");
  ComplexMatrix t(rows_, cols_);
  kernels::active().axpby(0.5, data_.data(), 0.5, transpose().data_.data(),
                          t.data_.data(), data_.size());
  return t;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  require_square(*this, "hermitian_part");
  ComplexMatrix t(rows_, cols_);
  kernels::active().axpby(0.5, data_.data(), 0.5, adjoint().data_.data(),
                          t.data_.data(), data_.size());
  return t;
}

ComplexMatrix ComplexMatrix::block(std::size_t row, std::size_t col,
                                   std::size_t nrows, std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  ComplexMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row + i, col + j);
  return b;
}

void ComplexMatrix::set_block(std::size_t row, std::size_t col,
                              const ComplexMatrix& m) {
  if (row + m.rows_ > rows_ || col + m.cols_ > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row + i, col + j) = m(i, j);
}

ComplexMatrix ComplexMatrix::scale_rows(std::span<const cplx> d) const {
  if (d.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "scale_rows");
  ComplexMatrix t(*this);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(i, j) *= d[i];
  return t;
}

ComplexMatrix ComplexMatrix::scale_cols(std::span<const cplx> d) const {
  if (d.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "scale_cols");
  ComplexMatrix t(*this);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(i, j) *= d[j];
  return t;
}

double ComplexMatrix::max_abs() const {
  return kernels::active().max_abs(data_.data(), data_.size());
}

double ComplexMatrix::frobenius() const {
  return std::sqrt(kernels::active().sum_sq(data_.data(), data_.size()));
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  return kernels::active().max_abs_diff(data_.data(), other.data_.data(),
                                        data_.size());
}

double ComplexMatrix::max_imag() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v.imag()));
  return m;
}

double ComplexMatrix::symmetry_residual() const {
  require_square(*this, "symmetry_residual");
  return max_abs_diff(transpose());
}

double ComplexMatrix::hermiticity_residual() const {
  require_square(*this, "hermiticity_residual");
  return max_abs_diff(adjoint());
}

double ComplexMatrix::unitarity_residual() const {
  require_square(*this, "unitarity_residual");
  return ((*this) * adjoint()).max_abs_diff(identity(rows_));
}

double ComplexMatrix::orthogonality_residual() const {
  return std::max(unitarity_residual(), max_imag());
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  kernels::active().axpby(1.0, data_.data(), 1.0, rhs.data_.data(), data_.data(),
                          data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  kernels::active().axpby(1.0, data_.data(), -1.0, rhs.data_.data(), data_.data(),
                          data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  kernels::active().axpby(s, data_.data(), 0.0, data_.data(), data_.data(),
                          data_.size());
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" +
                    std::to_string(a.cols_) + " and " + std::to_string(b.rows_) +
                    "x" + std::to_string(b.cols_));
  }
  ComplexMatrix c(a.rows_, b.cols_);
  kernels::active().gemm(a.data_.data(), b.data_.data(), c.data_.data(), a.rows_,
                         a.cols_, b.cols_);
  return c;
}

ComplexMatrix add_identity(const ComplexMatrix& a, cplx s) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "add_identity");
  ComplexMatrix t(a);
  for (std::size_t i = 0; i < a.rows(); ++i) t(i, i) += s;
  return t;
}

}  // namespace gcluster
