// Copyright 2026 The subharm Authors
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

// Data-parallel inner loops of the master-equation integrator.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2/FMA
// variant compiled in its own translation unit. The variant is picked once at
// first use from the CPU feature bits; SUBHARM_SIMD=scalar|avx2 in the
// environment overrides the choice. Variants agree to rounding, not bitwise
// (FMA contracts differently), so a given machine+selection is deterministic.

#include <complex>
#include <cstddef>
#include <string_view>

namespace subharm::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  /// y[i] += alpha * x[i]
  void (*caxpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
  /// y[i] += alpha * x[i] over reals
  void (*axpy)(std::size_t n, double alpha, const double* x, double* y);
  /// out[i] = y[i] + alpha * x[i]
  void (*axpy_into)(std::size_t n, const double* y, double alpha, const double* x, double* out);
  /// max |x[i]|^2
  double (*max_norm2)(std::size_t n, const cplx* x);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant was not built or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// The table used by the library.
const KernelTable& active_kernels();

}  // namespace subharm::kernels
