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

#include "subharm/numerics/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace subharm::kernels {

namespace {

// std::complex operator* goes through the Annex G NaN path; spell it out.
void caxpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = xd[2 * i];
    const double xi = xd[2 * i + 1];
    yd[2 * i] += ar * xr - ai * xi;
    yd[2 * i + 1] += ar * xi + ai * xr;
  }
}

void axpy_scalar(std::size_t n, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_into_scalar(std::size_t n, const double* y, double alpha, const double* x, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + alpha * x[i];
}

double max_norm2_scalar(std::size_t n, const cplx* x) {
  const auto* xd = reinterpret_cast<const double*>(x);
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = xd[2 * i] * xd[2 * i] + xd[2 * i + 1] * xd[2 * i + 1];
    // NaN must survive later finite entries so non-finite states are visible.
    if (v > m || std::isnan(v)) m = v;
    if (std::isnan(m)) break;
  }
  return m;
}

constexpr KernelTable kScalar{"scalar", caxpy_scalar, axpy_scalar, axpy_into_scalar,
                              max_norm2_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace subharm::kernels
