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

#include <atomic>
#include <cstdlib>
#include <string>

#include "gcluster/kernels.hpp"

namespace gcluster::kernels {

#if defined(GCLUSTER_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_table() {
#if defined(GCLUSTER_HAVE_AVX2)
  return &avx2_kernel_table();
#else
  return nullptr;
#endif
}

bool cpu_supports_avx2() {
#if defined(GCLUSTER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const KernelTable* initial_selection() {
  const char* env = std::getenv("GCLUSTER_KERNELS");
  const bool force_scalar = env != nullptr && std::string(env) == "scalar";
  if (!force_scalar && cpu_supports_avx2()) {
    return avx2_table();
  }
  return &scalar_table();
}

std::atomic<const KernelTable*>& current_table() {
  static std::atomic<const KernelTable*> table{initial_selection()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current_table().load(std::memory_order_acquire); }

Backend active_backend() {
  return &active() == &scalar_table() ? Backend::Scalar : Backend::Avx2;
}

bool select(Backend backend) {
  if (backend == Backend::Scalar) {
    current_table().store(&scalar_table(), std::memory_order_release);
    return true;
  }
  if (!cpu_supports_avx2()) return false;
  current_table().store(avx2_table(), std::memory_order_release);
  return true;
}

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace gcluster::kernels
