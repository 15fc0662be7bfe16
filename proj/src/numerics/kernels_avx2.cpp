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

#include <immintrin.h>

#include <limits>

namespace subharm::kernels {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
void caxpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  // alternating -ai, +ai so that swap(x) * ai_signed gives (-ai*xi, ai*xr)
  const __m256d ai = _mm256_setr_pd(-alpha.imag(), alpha.imag(), -alpha.imag(), alpha.imag());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(xd + 2 * i);
    const __m256d x1 = _mm256_loadu_pd(xd + 2 * i + 4);
    __m256d y0 = _mm256_loadu_pd(yd + 2 * i);
    __m256d y1 = _mm256_loadu_pd(yd + 2 * i + 4);
    const __m256d s0 = _mm256_permute_pd(x0, 0b0101);
    const __m256d s1 = _mm256_permute_pd(x1, 0b0101);
    y0 = _mm256_fmadd_pd(ar, x0, y0);
    y1 = _mm256_fmadd_pd(ar, x1, y1);
    y0 = _mm256_fmadd_pd(ai, s0, y0);
    y1 = _mm256_fmadd_pd(ai, s1, y1);
    _mm256_storeu_pd(yd + 2 * i, y0);
    _mm256_storeu_pd(yd + 2 * i + 4, y1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(xd + 2 * i);
    __m256d y0 = _mm256_loadu_pd(yd + 2 * i);
    y0 = _mm256_fmadd_pd(ar, x0, y0);
    y0 = _mm256_fmadd_pd(ai, _mm256_permute_pd(x0, 0b0101), y0);
    _mm256_storeu_pd(yd + 2 * i, y0);
  }
  if (i < n) {
    const double xr = xd[2 * i];
    const double xi = xd[2 * i + 1];
    yd[2 * i] += alpha.real() * xr - alpha.imag() * xi;
    yd[2 * i + 1] += alpha.real() * xi + alpha.imag() * xr;
  }
}

void axpy_avx2(std::size_t n, double alpha, const double* x, double* y) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(y + i + 4,
                     _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_into_avx2(std::size_t n, const double* y, double alpha, const double* x, double* out) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = y[i] + alpha * x[i];
}

double max_norm2_avx2(std::size_t n, const cplx* x) {
  const auto* xd = reinterpret_cast<const double*>(x);
  __m256d best = _mm256_setzero_pd();
  __m256d nan = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    const __m256d sq = _mm256_mul_pd(v, v);
    // [re0^2+im0^2, same, re1^2+im1^2, same]
    const __m256d norm = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0b0101));
    nan = _mm256_or_pd(nan, _mm256_cmp_pd(norm, norm, _CMP_UNORD_Q));
    best = _mm256_max_pd(best, norm);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = lanes[0] > lanes[2] ? lanes[0] : lanes[2];
  if (_mm256_movemask_pd(nan) != 0) return std::numeric_limits<double>::quiet_NaN();
  if (i < n) {
    const double v = xd[2 * i] * xd[2 * i] + xd[2 * i + 1] * xd[2 * i + 1];
    if (!(v <= m)) m = v;
  }
  return m;
}

constexpr KernelTable kAvx2{"avx2", caxpy_avx2, axpy_avx2, axpy_into_avx2, max_norm2_avx2};

}  // namespace

namespace detail {
const KernelTable& avx2_table() { return kAvx2; }
}  // namespace detail

}  // namespace subharm::kernels
