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

#include <algorithm>
#include <cmath>

#include "gcluster/kernels.hpp"

namespace gcluster::kernels {
namespace {

void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                 std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] = {crow[j].real() + (ar * br - ai * bi),
                   crow[j].imag() + (ar * bi + ai * br)};
      }
    }
  }
}

void axpby_scalar(cplx alpha, const cplx* x, cplx beta, const cplx* y,
                  cplx* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const double re = alpha.real() * x[i].real() - alpha.imag() * x[i].imag() +
                      beta.real() * y[i].real() - beta.imag() * y[i].imag();
    const double im = alpha.real() * x[i].imag() + alpha.imag() * x[i].real() +
                      beta.real() * y[i].imag() + beta.imag() * y[i].real();
    out[i] = {re, im};
  }
}

double max_abs_scalar(const cplx* x, std::size_t len) {
  double m = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    m = std::max(m, std::sqrt(x[i].real() * x[i].real() +
                              x[i].imag() * x[i].imag()));
  }
  return m;
}

double max_abs_diff_scalar(const cplx* x, const cplx* y, std::size_t len) {
  double m = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double dr = x[i].real() - y[i].real();
    const double di = x[i].imag() - y[i].imag();
    m = std::max(m, std::sqrt(dr * dr + di * di));
  }
  return m;
}

double sum_sq_scalar(const cplx* x, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{gemm_scalar, axpby_scalar, max_abs_scalar,
                                 max_abs_diff_scalar, sum_sq_scalar};
  return table;
}

}  // namespace gcluster::kernels
