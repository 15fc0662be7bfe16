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

#include "subharm/numerics/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace subharm::numerics {

namespace {

void check_finite(const Triplet& t) {
  if (!std::isfinite(t.value.real()) || !std::isfinite(t.value.imag())) {
    throw NumericsError(NumericsErrc::InvalidArgument, "sparse operator entry is not finite");
  }
}

void check_same_dim(const SparseOperator& a, const SparseOperator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw NumericsError(NumericsErrc::DimensionMismatch,
                        std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

SparseOperator::SparseOperator(std::size_t dim) : dim_(dim) { normalize(); }

SparseOperator::SparseOperator(std::size_t dim, std::vector<Triplet> triplets)
    : dim_(dim), entries_(std::move(triplets)) {
  for (const auto& t : entries_) {
    if (t.row >= dim_ || t.col >= dim_) {
      throw NumericsError(NumericsErrc::InvalidArgument,
                          "triplet index out of range for dimension " + std::to_string(dim_));
    }
    check_finite(t);
  }
  normalize();
}

void SparseOperator::normalize() {
  std::stable_sort(entries_.begin(), entries_.end(), [](const Triplet& x, const Triplet& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  std::vector<Triplet> merged;
  merged.reserve(entries_.size());
  for (const auto& t : entries_) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col) {
      merged.back().value += t.value;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value == cplx{}; });
  entries_ = std::move(merged);

  row_start_.assign(dim_ + 1, 0);
  for (const auto& t : entries_) ++row_start_[t.row + 1];
  for (std::size_t i = 0; i < dim_; ++i) row_start_[i + 1] += row_start_[i];
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  std::vector<Triplet> t;
  t.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) t.push_back({i, i, 1.0});
  return {dim, std::move(t)};
}

SparseOperator SparseOperator::diagonal(std::span<const cplx> diag) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < diag.size(); ++i) t.push_back({i, i, diag[i]});
  return {diag.size(), std::move(t)};
}

SparseOperator SparseOperator::annihilation(std::size_t n) {
  std::vector<Triplet> t;
  for (std::size_t k = 1; k < n; ++k) {
    t.push_back({k - 1, k, std::sqrt(static_cast<double>(k))});
  }
  return {n, std::move(t)};
}

SparseOperator SparseOperator::transition(std::size_t dim, std::size_t row, std::size_t col) {
  return {dim, {{row, col, 1.0}}};
}

std::span<const Triplet> SparseOperator::row(std::size_t i) const {
  return std::span<const Triplet>(entries_).subspan(row_start_[i],
                                                    row_start_[i + 1] - row_start_[i]);
}

cplx SparseOperator::at(std::size_t i, std::size_t j) const {
  const auto r = row(i);
  const auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const Triplet& t, std::size_t c) { return t.col < c; });
  return (it != r.end() && it->col == j) ? it->value : cplx{};
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, std::conj(e.value)});
  return {dim_, std::move(t)};
}

DenseMatrix SparseOperator::to_dense() const {
  DenseMatrix m(dim_, dim_);
  for (const auto& e : entries_) m(e.row, e.col) = e.value;
  return m;
}

SparseOperator kron(const SparseOperator& a, const SparseOperator& b) {
  const std::size_t nb = b.dim();
  std::vector<Triplet> t;
  t.reserve(a.nnz() * b.nnz());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      t.push_back({x.row * nb + y.row, x.col * nb + y.col, x.value * y.value});
    }
  }
  return {a.dim() * nb, std::move(t)};
}

ComplexVector spmv(const SparseOperator& a, std::span<const cplx> x) {
  if (x.size() != a.dim()) {
    throw NumericsError(NumericsErrc::DimensionMismatch,
                        "spmv: operator dimension " + std::to_string(a.dim()) +
                            ", vector length " + std::to_string(x.size()));
  }
  ComplexVector y(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    cplx acc{};
    for (const auto& e : a.row(i)) acc += e.value * x[e.col];
    y[i] = acc;
  }
  return y;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  check_same_dim(a, b, "sparse product");
  std::vector<Triplet> t;
  for (const auto& x : a.entries()) {
    for (const auto& y : b.row(x.col)) t.push_back({x.row, y.col, x.value * y.value});
  }
  return {a.dim(), std::move(t)};
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  check_same_dim(a, b, "sparse sum");
  std::vector<Triplet> t(a.entries().begin(), a.entries().end());
  t.insert(t.end(), b.entries().begin(), b.entries().end());
  return {a.dim(), std::move(t)};
}

SparseOperator operator*(cplx s, const SparseOperator& a) {
  std::vector<Triplet> t(a.entries().begin(), a.entries().end());
  for (auto& e : t) e.value *= s;
  return {a.dim(), std::move(t)};
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  return a + cplx{-1.0} * b;
}

double max_abs_difference(const SparseOperator& a, const SparseOperator& b) {
  check_same_dim(a, b, "sparse difference");
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e.value - b.at(e.row, e.col)));
  for (const auto& e : b.entries()) m = std::max(m, std::abs(e.value - a.at(e.row, e.col)));
  return m;
}

double hermiticity_defect(const SparseOperator& a) { return max_abs_difference(a, a.adjoint()); }

}  // namespace subharm::numerics
