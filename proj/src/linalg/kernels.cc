// Copyright 2026 The fermko Authors
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

#include "fermko/linalg/kernels.h"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fermko::linalg {
namespace {

struct KernelTable {
  SimdBackend backend;
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  std::size_t (*argmax_abs)(const double*, std::size_t);
};

constexpr KernelTable kScalarTable{SimdBackend::kScalar, &scalar::dot, &scalar::axpy,
                                   &scalar::argmax_abs};
constexpr KernelTable kAvx2Table{SimdBackend::kAvx2, &avx2::dot, &avx2::axpy,
                                 &avx2::argmax_abs};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  // FERMKO_SIMD=scalar forces the reference path.
  if (const char* env = std::getenv("FERMKO_SIMD")) {
    if (std::string(env) == "scalar") return &kScalarTable;
  }
  if (avx2::compiled() && cpu_has_avx2()) return &kAvx2Table;
  return &kScalarTable;
}

std::atomic<const KernelTable*>& table() {
  static std::atomic<const KernelTable*> current{initial_table()};
  return current;
}

}  // namespace

std::string_view backend_name(SimdBackend backend) {
  switch (backend) {
    case SimdBackend::kScalar:
      return "scalar";
    case SimdBackend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_supported(SimdBackend backend) {
  if (backend == SimdBackend::kScalar) return true;
  return avx2::compiled() && cpu_has_avx2();
}

SimdBackend active_backend() { return table().load(std::memory_order_relaxed)->backend; }

void set_backend(SimdBackend backend) {
  if (!backend_supported(backend)) {
    throw std::invalid_argument("SIMD backend not supported on this CPU: " +
                                std::string(backend_name(backend)));
  }
  table().store(backend == SimdBackend::kAvx2 ? &kAvx2Table : &kScalarTable);
}

double dot(std::span<const double> a, std::span<const double> b) {
  return table().load(std::memory_order_relaxed)->dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  table().load(std::memory_order_relaxed)->axpy(alpha, x.data(), y.data(), x.size());
}

std::size_t argmax_abs(std::span<const double> x) {
  return table().load(std::memory_order_relaxed)->argmax_abs(x.data(), x.size());
}

}  // namespace fermko::linalg
