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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "subharm/numerics/error.hpp"

namespace subharm::numerics {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const cplx> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  [[nodiscard]] std::span<cplx> data() noexcept { return data_; }
  [[nodiscard]] std::span<const cplx> data() const noexcept { return data_; }

  [[nodiscard]] DenseMatrix adjoint() const;
  [[nodiscard]] bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
ComplexVector operator*(const DenseMatrix& a, std::span<const cplx> x);

double max_abs(std::span<const cplx> x);

/// PA = LU with partial (row) pivoting.
class LuDecomposition {
 public:
  /// Throws SingularMatrix when a pivot magnitude falls below 1e-300.
  explicit LuDecomposition(DenseMatrix a);

  [[nodiscard]] ComplexVector solve(std::span<const cplx> b) const;
  [[nodiscard]] DenseMatrix inverse() const;
  [[nodiscard]] std::size_t size() const noexcept { return lu_.rows(); }

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
};

ComplexVector lu_solve(const DenseMatrix& a, std::span<const cplx> b);

/// ||A||_1 * ||A^-1||_1 from the explicit inverse; small systems only.
double condition_number_1(const DenseMatrix& a);

/// True when A + shift*I admits a Cholesky factorization, i.e. the Hermitian
/// matrix A has all eigenvalues strictly above -shift.
bool cholesky_succeeds(const DenseMatrix& a, double shift);

/// Smallest eigenvalue of a Hermitian matrix, bracketed by bisection on the
/// Cholesky test to within `resolution`.
double min_eigenvalue_hermitian(const DenseMatrix& a, double resolution = 1e-12);

}  // namespace subharm::numerics
