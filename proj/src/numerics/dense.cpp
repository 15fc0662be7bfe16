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

#include "subharm/numerics/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subharm::numerics {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

bool DenseMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw NumericsError(NumericsErrc::DimensionMismatch, "matrix product shape mismatch");
  }
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexVector operator*(const DenseMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) {
    throw NumericsError(NumericsErrc::DimensionMismatch, "matrix-vector shape mismatch");
  }
  ComplexVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double max_abs(std::span<const cplx> x) {
  double m = 0.0;
  for (const auto& z : x) m = std::max(m, std::abs(z));
  return m;
}

LuDecomposition::LuDecomposition(DenseMatrix a) : lu_(std::move(a)) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n) {
    throw NumericsError(NumericsErrc::DimensionMismatch, "LU requires a square matrix");
  }
  perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (!(best >= 1e-300)) {
      throw NumericsError(NumericsErrc::SingularMatrix, "pivot below 1e-300 in LU");
    }
    if (pivot != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(pivot).begin());
      std::swap(perm_[k], perm_[pivot]);
    }
    const cplx inv = 1.0 / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx factor = lu_(i, k) * inv;
      lu_(i, k) = factor;
      if (factor == cplx{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

ComplexVector LuDecomposition::solve(std::span<const cplx> b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) {
    throw NumericsError(NumericsErrc::DimensionMismatch, "right-hand side length mismatch");
  }
  ComplexVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    cplx acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc / lu_(i, i);
  }
  return x;
}

DenseMatrix LuDecomposition::inverse() const {
  const std::size_t n = lu_.rows();
  DenseMatrix inv(n, n);
  ComplexVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), cplx{});
    e[j] = 1.0;
    const auto col = solve(e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

ComplexVector lu_solve(const DenseMatrix& a, std::span<const cplx> b) {
  if (a.rows() != b.size()) {
    throw NumericsError(NumericsErrc::DimensionMismatch, "right-hand side length mismatch");
  }
  return LuDecomposition(a).solve(b);
}

namespace {

double norm_1(const DenseMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

double condition_number_1(const DenseMatrix& a) {
  try {
    const LuDecomposition lu(a);
    return norm_1(a) * norm_1(lu.inverse());
  } catch (const NumericsError& e) {
    if (e.code() == NumericsErrc::SingularMatrix) return std::numeric_limits<double>::infinity();
    throw;
  }
}

bool cholesky_succeeds(const DenseMatrix& a, double shift) {
  const std::size_t n = a.rows();
  if (a.cols() != n) {
    throw NumericsError(NumericsErrc::DimensionMismatch, "Cholesky requires a square matrix");
  }
  // Lower factor, row-major, only j <= i touched.
  DenseMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      cplx acc = a(i, j);
      if (i == j) acc += shift;
      for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
      if (i == j) {
        const double d = acc.real();
        if (!(d > 0.0)) return false;
        l(i, i) = std::sqrt(d);
      } else {
        l(i, j) = acc / l(j, j).real();
      }
    }
  }
  return true;
}

double min_eigenvalue_hermitian(const DenseMatrix& a, double resolution) {
  const std::size_t n = a.rows();
  if (n == 0) return 0.0;
  // Gershgorin lower bound and the smallest diagonal entry as upper bound.
  double lo = std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) radius += std::abs(a(i, j));
    }
    lo = std::min(lo, a(i, i).real() - radius);
    hi = std::min(hi, a(i, i).real());
  }
  lo -= resolution;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (cholesky_succeeds(a, -mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace subharm::numerics
