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

// Dense complex inner loops. Every kernel has a portable scalar reference and,
// on x86-64, an AVX2/FMA variant picked at runtime from CPUID. Both operate on
// interleaved (re, im) row-major storage, i.e. std::complex<double> arrays.

#include <complex>
#include <cstddef>
#include <string_view>

namespace gcluster::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  // c[m x n] = a[m x k] * b[k x n]
  void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);
  // out[i] = alpha * x[i] + beta * y[i]
  void (*axpby)(cplx alpha, const cplx* x, cplx beta, const cplx* y, cplx* out,
                std::size_t len);
  // max_i |x[i]|
  double (*max_abs)(const cplx* x, std::size_t len);
  // max_i |x[i] - y[i]|
  double (*max_abs_diff)(const cplx* x, const cplx* y, std::size_t len);
  // sum_i |x[i]|^2
  double (*sum_sq)(const cplx* x, std::size_t len);
};

const KernelTable& scalar_table();
// Null when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool cpu_supports_avx2();

// Active table. Selected once from CPUID; select() overrides it (tests,
// GCLUSTER_KERNELS=scalar in the environment).
const KernelTable& active();
Backend active_backend();
// Returns false if the requested backend is unavailable on this machine.
bool select(Backend backend);

std::string_view to_string(Backend backend);

}  // namespace gcluster::kernels
