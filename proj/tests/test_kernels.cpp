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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "subharm/numerics/kernels.hpp"

using subharm::kernels::cplx;
using subharm::kernels::KernelTable;

namespace {

std::vector<double> random_reals(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<cplx> random_complex(std::size_t n, unsigned seed) {
  const auto re = random_reals(2 * n, seed);
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = {re[2 * i], re[2 * i + 1]};
  return v;
}

// Lengths that exercise the vector body and every remainder.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 31, 64, 1001};

void check_equivalent(const KernelTable& ref, const KernelTable& alt) {
  for (const std::size_t n : kLengths) {
    CAPTURE(n);
    const auto x = random_complex(n, 11);
    auto y_ref = random_complex(n, 12);
    auto y_alt = y_ref;
    const cplx alpha{0.37, -1.25};
    ref.caxpy(n, alpha, x.data(), y_ref.data());
    alt.caxpy(n, alpha, x.data(), y_alt.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y_ref[i] - y_alt[i]) < 1e-15);

    const auto xr = random_reals(n, 13);
    auto yr_ref = random_reals(n, 14);
    auto yr_alt = yr_ref;
    ref.axpy(n, -0.8, xr.data(), yr_ref.data());
    alt.axpy(n, -0.8, xr.data(), yr_alt.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(yr_ref[i] - yr_alt[i]) < 1e-15);

    std::vector<double> out_ref(n), out_alt(n);
    ref.axpy_into(n, yr_ref.data(), 2.5, xr.data(), out_ref.data());
    alt.axpy_into(n, yr_ref.data(), 2.5, xr.data(), out_alt.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(out_ref[i] - out_alt[i]) < 1e-15);

    CHECK(ref.max_norm2(n, x.data()) == doctest::Approx(alt.max_norm2(n, x.data())).epsilon(1e-15));
  }
}

}  // namespace

TEST_CASE("scalar kernels match their definitions") {
  const auto& k = subharm::kernels::scalar_kernels();
  std::vector<cplx> x{{1, 2}, {3, -4}, {0, 0}};
  std::vector<cplx> y{{1, 0}, {0, 1}, {5, 5}};
  k.caxpy(3, cplx{0, 1}, x.data(), y.data());
  CHECK(y[0] == cplx(-1, 1));
  CHECK(y[1] == cplx(4, 4));
  CHECK(y[2] == cplx(5, 5));
  CHECK(k.max_norm2(3, x.data()) == 25.0);
  CHECK(k.max_norm2(0, x.data()) == 0.0);
}

TEST_CASE("max_norm2 propagates NaN") {
  std::vector<cplx> x(9, cplx{1.0, 0.0});
  x[6] = {std::nan(""), 0.0};
  CHECK(std::isnan(subharm::kernels::scalar_kernels().max_norm2(x.size(), x.data())));
  if (const auto* avx = subharm::kernels::avx2_kernels()) {
    CHECK(std::isnan(avx->max_norm2(x.size(), x.data())));
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const auto* avx = subharm::kernels::avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 variant unavailable on this machine; skipped");
    return;
  }
  check_equivalent(subharm::kernels::scalar_kernels(), *avx);
}

TEST_CASE("active table is one of the built variants") {
  const auto& active = subharm::kernels::active_kernels();
  const auto* avx = subharm::kernels::avx2_kernels();
  const bool known = &active == &subharm::kernels::scalar_kernels() || (avx && &active == avx);
  CHECK(known);
}
