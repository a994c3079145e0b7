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

#ifndef FERMKO_LINALG_KERNELS_H_
#define FERMKO_LINALG_KERNELS_H_

// Dense double-precision kernels used by the simplex inner loops. Every
// kernel has a scalar reference implementation and, where the CPU allows it,
// an AVX2/FMA variant picked once at startup.

#include <cstddef>
#include <span>
#include <string_view>

namespace fermko::linalg {

enum class SimdBackend { kScalar, kAvx2 };

std::string_view backend_name(SimdBackend backend);
bool backend_supported(SimdBackend backend);
SimdBackend active_backend();

// Switches the dispatch table. Not thread-safe; call before spawning workers.
// Throws std::invalid_argument if the backend is unsupported on this CPU.
void set_backend(SimdBackend backend);

double dot(std::span<const double> a, std::span<const double> b);
// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
// Returns the index of the entry with the largest magnitude (first on ties),
// or x.size() for an empty span.
std::size_t argmax_abs(std::span<const double> x);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
std::size_t argmax_abs(const double* x, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool compiled();
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
std::size_t argmax_abs(const double* x, std::size_t n);
}  // namespace avx2

}  // namespace fermko::linalg

#endif  // FERMKO_LINALG_KERNELS_H_
