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

// Compiled with -mavx2 -mfma. Only reached after a CPUID check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "gcluster/kernels.hpp"

namespace gcluster::kernels {
namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}
inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// (ar + i ai) * v for both lanes of v.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aval = a[i * k + p];
      const __m256d ar = _mm256_set1_pd(aval.real());
      const __m256d ai = _mm256_set1_pd(aval.imag());
      const cplx* brow = b + p * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        store2(crow + j,
               _mm256_add_pd(load2(crow + j), cmul_bcast(ar, ai, load2(brow + j))));
      }
      for (; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] = {crow[j].real() + (aval.real() * br - aval.imag() * bi),
                   crow[j].imag() + (aval.real() * bi + aval.imag() * br)};
      }
    }
  }
}

void axpby_avx2(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out,
                std::size_t len) {
  const __m256d alr = _mm256_set1_pd(alpha.real());
  const __m256d ali = _mm256_set1_pd(alpha.imag());
  const __m256d ber = _mm256_set1_pd(beta.real());
  const __m256d bei = _mm256_set1_pd(beta.imag());
  const std::size_t len2 = len & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < len2; i += 2) {
    store2(out + i, _mm256_add_pd(cmul_bcast(alr, ali, load2(x + i)),
                                  cmul_bcast(ber, bei, load2(y + i))));
  }
  for (; i < len; ++i) {
    out[i] = {alpha.real() * x[i].real() - alpha.imag() * x[i].imag() +
                  beta.real() * y[i].real() - beta.imag() * y[i].imag(),
              alpha.real() * x[i].imag() + alpha.imag() * x[i].real() +
                  beta.real() * y[i].imag() + beta.imag() * y[i].real()};
  }
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

double max_abs_avx2(const cplx* x, std::size_t len) {
  __m256d best = _mm256_setzero_pd();
  const std::size_t len2 = len & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < len2; i += 2) {
    const __m256d v = load2(x + i);
    const __m256d sq = _mm256_mul_pd(v, v);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  double m = hmax(best);
  for (; i < len; ++i) {
    m = std::max(m, x[i].real() * x[i].real() + x[i].imag() * x[i].imag());
  }
  return std::sqrt(m);
}

double max_abs_diff_avx2(const cplx* x, const cplx* y, std::size_t len) {
  __m256d best = _mm256_setzero_pd();
  const std::size_t len2 = len & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < len2; i += 2) {
    const __m256d d = _mm256_sub_pd(load2(x + i), load2(y + i));
    const __m256d sq = _mm256_mul_pd(d, d);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  double m = hmax(best);
  for (; i < len; ++i) {
    const double dr = x[i].real() - y[i].real();
    const double di = x[i].imag() - y[i].imag();
    m = std::max(m, dr * dr + di * di);
  }
  return std::sqrt(m);
}

double sum_sq_avx2(const cplx* x, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t len2 = len & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < len2; i += 2) {
    const __m256d v = load2(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < len; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{gemm_avx2, axpby_avx2, max_abs_avx2,
                                 max_abs_diff_avx2, sum_sq_avx2};
  return table;
}

}  // namespace gcluster::kernels
