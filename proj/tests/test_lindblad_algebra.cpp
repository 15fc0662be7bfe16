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

#include "subharm/lindblad.hpp"

using namespace subharm;
using namespace subharm::lindblad;

namespace {

ComplexVector basis(std::size_t dim, std::size_t i) {
  ComplexVector v(dim);
  v[i] = 1.0;
  return v;
}

double max_entry(const DenseMatrix& m) { return numerics::max_abs(m.data()); }

// Random Hermitian, trace-one state supported on the charge blocks.
DensityOperator random_block_state(const OperatorSet& ops, unsigned seed) {
  const SectorLayout layout(ops.cfg);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  const std::size_t dim = ops.cfg.dim();
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      if (layout.sector_of(i) != layout.sector_of(j)) continue;
      const cplx v = i == j ? cplx(std::abs(d(rng))) : cplx(d(rng), d(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  cplx tr{};
  for (std::size_t i = 0; i < dim; ++i) tr += m(i, i);
  for (auto& v : m.data()) v /= tr.real();
  return DensityOperator(m);
}

}  // namespace

TEST_CASE("cutoff below two is rejected") {
  CHECK_THROWS_AS((void)validate_config({1}), LindbladError);
  CHECK(validate_config({2}).dim() == 12);
  CHECK(HilbertConfig{8}.dim() == 192);
}

TEST_CASE("basis order is atom, mode a, mode b") {
  const HilbertConfig cfg{4};
  const std::size_t i = cfg.index(kLevelB, 2, 3);
  CHECK(i == (1 * 4 + 2) * 4 + 3);
  CHECK(cfg.level_of(i) == kLevelB);
  CHECK(cfg.na_of(i) == 2);
  CHECK(cfg.nb_of(i) == 3);
}

TEST_CASE("mode ladder elements") {
  const HilbertConfig cfg{2};
  const auto ops = build_operator_set(cfg);
  for (std::size_t lvl = 0; lvl < 3; ++lvl) {
    const auto y = spmv(ops.a, basis(cfg.dim(), cfg.index(lvl, 1, 0)));
    for (std::size_t r = 0; r < cfg.dim(); ++r) {
      CHECK(y[r] == cplx(r == cfg.index(lvl, 0, 0) ? 1.0 : 0.0));
    }
  }
  const HilbertConfig big{6};
  const auto ops6 = build_operator_set(big);
  for (std::size_t n = 1; n < 6; ++n) {
    CHECK(std::abs(ops6.b.at(big.index(kLevelA, 3, n - 1), big.index(kLevelA, 3, n)) -
                   std::sqrt(double(n))) < 1e-15);
    CHECK(std::abs(ops6.a.at(big.index(kLevelC, n - 1, 2), big.index(kLevelC, n, 2)) -
                   std::sqrt(double(n))) < 1e-15);
  }
}

TEST_CASE("atomic operator algebra") {
  const auto ops = build_operator_set({3});
  CHECK(max_abs_difference(ops.sigma_b * ops.sigma_a, ops.sigma_c) == 0.0);
  CHECK(max_abs_difference(ops.eta_a + ops.eta_b + ops.eta_c, ops.identity) == 0.0);
  CHECK(max_abs_difference(ops.sigma_a.adjoint() * ops.sigma_a, ops.eta_a) == 0.0);
  CHECK(max_abs_difference(ops.sigma_b.adjoint() * ops.sigma_b, ops.eta_b) == 0.0);
  CHECK(max_abs_difference(ops.sigma_a * ops.a, ops.a * ops.sigma_a) == 0.0);
}

TEST_CASE("mode commutator below the top level") {
  const HilbertConfig cfg{5};
  const auto ops = build_operator_set(cfg);
  const auto comm = ops.a * ops.a.adjoint() - ops.a.adjoint() * ops.a;
  for (std::size_t i = 0; i < cfg.dim(); ++i) {
    if (cfg.na_of(i) + 1 < cfg.fock_cutoff) CHECK(std::abs(comm.at(i, i) - 1.0) < 1e-14);
  }
}

TEST_CASE("hamiltonian") {
  const HilbertConfig cfg{4};
  const auto ops = build_operator_set(cfg);
  const ModelParams p{0.2, 0.8, 0.5};
  const double g = coupling_from_gamma_c(p.kappa, p.gamma_c);
  const auto h = build_hamiltonian(ops, p, g);
  CHECK(hermiticity_defect(h) < 1e-12);
  CHECK(build_hamiltonian(ops, {0.0, 0.8, 0.0}, 0.0).nnz() == 0);

  // Hand expansion: only -i g b^dag sigma_b links |b,0,0> to |c,0,1>.
  const cplx elem = h.at(cfg.index(kLevelC, 0, 1), cfg.index(kLevelB, 0, 0));
  CHECK(std::abs(elem - cplx(0.0, -g)) < 1e-15);
  // Parametric term: <a,1,1| H |a,0,0> = -i eps.
  CHECK(std::abs(h.at(cfg.index(kLevelA, 1, 1), cfg.index(kLevelA, 0, 0)) - cplx(0.0, -p.epsilon)) <
        1e-15);

  const auto bare = build_hamiltonian(ops, p, 0.0);
  const auto param = cplx(0.0, p.epsilon) * (ops.a * ops.b - ops.a.adjoint() * ops.b.adjoint());
  CHECK(max_abs_difference(bare, param) < 1e-15);
}

TEST_CASE("density operator basics") {
  const HilbertConfig cfg{3};
  const auto ops = build_operator_set(cfg);
  const auto rho = DensityOperator::initial_state(cfg);
  CHECK(rho.trace() == cplx(1.0));
  CHECK(expectation(rho, ops.identity) == cplx(1.0));
  CHECK(expectation(rho, ops.a.adjoint() * ops.a) == cplx(0.0));
  CHECK(expectation(rho, ops.eta_a) == cplx(0.0));
  CHECK(expectation(rho, ops.eta_c) == cplx(1.0));
  CHECK(rho.hermiticity_defect() == 0.0);
  CHECK(rho.min_eigenvalue() == doctest::Approx(0.0).epsilon(1e-11).scale(1.0));
  CHECK_THROWS_AS((void)expectation(rho, SparseOperator::identity(5)), numerics::NumericsError);
}

TEST_CASE("dark state is stationary") {
  const HilbertConfig cfg{4};
  const auto ops = build_operator_set(cfg);
  const auto rho = DensityOperator::initial_state(cfg);
  for (const double g : {0.0, 0.3}) {
    const auto h = build_hamiltonian(ops, {0.0, 0.8, 0.0}, g);
    CHECK(max_entry(lindblad_rhs(rho, h, ops, 0.8).matrix()) == 0.0);
  }
}

TEST_CASE("excited atom starts emitting into mode a") {
  const HilbertConfig cfg{3};
  const auto ops = build_operator_set(cfg);
  const double g = 0.4;
  const auto h = build_hamiltonian(ops, {0.0, 0.8, 0.0}, g);
  const std::size_t a00 = cfg.index(kLevelA, 0, 0);
  const std::size_t b10 = cfg.index(kLevelB, 1, 0);
  const auto d = lindblad_rhs(DensityOperator::basis_state(cfg, a00), h, ops, 0.8).matrix();
  // -i[H, rho] with H|a,0,0> = -i g |b,1,0>.
  CHECK(std::abs(d(b10, a00) - cplx(-g)) < 1e-15);
  CHECK(std::abs(d(a00, b10) - cplx(-g)) < 1e-15);
  CHECK(std::abs(d(a00, a00)) < 1e-15);
  for (std::size_t i = 0; i < cfg.dim(); ++i) {
    for (std::size_t j = 0; j < cfg.dim(); ++j) {
      if ((i == a00 && j == b10) || (i == b10 && j == a00)) continue;
      CHECK(std::abs(d(i, j)) < 1e-15);
    }
  }
}

TEST_CASE("master equation preserves trace and hermiticity") {
  const HilbertConfig cfg{3};
  const auto ops = build_operator_set(cfg);
  const auto h = build_hamiltonian(ops, {0.25, 0.8, 0.5}, coupling_from_gamma_c(0.8, 0.5));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 5; ++trial) {
    DenseMatrix m(cfg.dim(), cfg.dim());
    for (auto& v : m.data()) v = {nd(rng), nd(rng)};
    const auto d = lindblad_rhs(DensityOperator(m), h, ops, 0.8);
    CHECK(std::abs(d.trace()) < 1e-12);
    // Hermitian input gives Hermitian output.
    DenseMatrix herm(cfg.dim(), cfg.dim());
    for (std::size_t i = 0; i < cfg.dim(); ++i)
      for (std::size_t j = 0; j < cfg.dim(); ++j) herm(i, j) = m(i, j) + std::conj(m(j, i));
    const auto dh = lindblad_rhs(DensityOperator(herm), h, ops, 0.8);
    CHECK(dh.hermiticity_defect() < 1e-12);
    CHECK(std::abs(dh.trace()) < 1e-12);
  }
}

TEST_CASE("charge sectors") {
  const HilbertConfig cfg{4};
  const SectorLayout layout(cfg);
  CHECK(layout.sector_count() == 8);
  std::size_t total = 0;
  for (std::size_t s = 0; s < layout.sector_count(); ++s) total += layout.size(s);
  CHECK(total == cfg.dim());
  CHECK(layout.charge(cfg.index(kLevelB, 2, 1)) == 0);
  CHECK(layout.charge(cfg.index(kLevelA, 3, 0)) == 3);
  CHECK(layout.charge(cfg.index(kLevelC, 0, 3)) == -3);
  CHECK(layout.charge(cfg.index(kLevelB, 0, 3)) == -4);
  for (std::size_t i = 0; i < cfg.dim(); ++i) {
    CHECK(layout.members(layout.sector_of(i))[layout.local_of(i)] == i);
  }
}

TEST_CASE("hamiltonian conserves charge and jumps shift it by one") {
  const HilbertConfig cfg{4};
  const auto ops = build_operator_set(cfg);
  const SectorLayout layout(cfg);
  const auto h = build_hamiltonian(ops, {0.3, 0.8, 0.5}, 0.3);
  CHECK(split_by_sector(layout, h).shift == 0);
  CHECK(split_by_sector(layout, ops.a).shift == -1);
  CHECK(split_by_sector(layout, ops.b).shift == 1);
  // a + b mixes shifts.
  try {
    (void)split_by_sector(layout, ops.a + ops.b);
    FAIL("expected SymmetryBroken");
  } catch (const LindbladError& e) {
    CHECK(e.code() == LindbladErrc::SymmetryBroken);
  }
}

TEST_CASE("sector engine matches the dense master equation") {
  for (const std::size_t n : {2u, 3u, 5u}) {
    CAPTURE(n);
    const HilbertConfig cfg{n};
    const auto ops = build_operator_set(cfg);
    const ModelParams p{0.27, 0.8, 0.6};
    const auto h = build_hamiltonian(ops, p, coupling_from_gamma_c(p.kappa, p.gamma_c));
    const SectorEngine engine(ops, h, p.kappa);
    const auto rho = random_block_state(ops, 100 + unsigned(n));

    const auto packed = engine.pack(rho);
    CHECK(packed.size() == engine.layout().state_size());
    ComplexVector d(packed.size());
    engine.rhs(packed, d);
    const auto fast = engine.unpack(d).matrix();
    const auto ref = lindblad_rhs(rho, h, ops, p.kappa).matrix();
    for (std::size_t i = 0; i < cfg.dim(); ++i)
      for (std::size_t j = 0; j < cfg.dim(); ++j) CHECK(std::abs(fast(i, j) - ref(i, j)) < 1e-13);

    CHECK(std::abs(engine.trace(packed) - rho.trace()) < 1e-14);
    const auto n_op = ops.a.adjoint() * ops.a + ops.b.adjoint() * ops.b;
    CHECK(std::abs(engine.observable(n_op)(packed) - expectation(rho, n_op)) < 1e-13);
    CHECK(engine.min_eigenvalue(packed) == doctest::Approx(rho.min_eigenvalue()).epsilon(1e-9));
  }
}

TEST_CASE("pack rejects coherence between sectors") {
  const HilbertConfig cfg{3};
  const auto ops = build_operator_set(cfg);
  const SectorEngine engine(ops, build_hamiltonian(ops, {0.1, 0.8, 0.0}, 0.0), 0.8);
  auto rho = DensityOperator::initial_state(cfg);
  const std::size_t i = cfg.index(kLevelC, 0, 0);
  const std::size_t j = cfg.index(kLevelC, 1, 0);
  rho.matrix()(i, j) = 0.1;
  rho.matrix()(j, i) = 0.1;
  CHECK_THROWS_AS((void)engine.pack(rho), LindbladError);
}

TEST_CASE("exact moment equations cover the cavity and atomic sets") {
  const auto ops = build_operator_set({4});
  const auto set = exact_moment_equations(ops, {0.2, 0.8, 0.1}, coupling_from_gamma_c(0.8, 0.1));
  CHECK(set.equations.size() == 18);
  std::size_t atomic = 0;
  for (const auto& e : set.equations) {
    if (e.name.find("sigma") != std::string::npos || e.name.find("eta") != std::string::npos) ++atomic;
  }
  CHECK(atomic == 6);
}

TEST_CASE("exact moment equations hold instantaneously") {
  // The dense generator gives d<L>/dt = Tr(L drho/dt) directly, so every
  // equation must balance on an arbitrary state whose Fock support stays
  // two levels below the cutoff.
  const HilbertConfig cfg{6};
  const auto ops = build_operator_set(cfg);
  const ModelParams p{0.23, 0.8, 0.4};
  const double g = coupling_from_gamma_c(p.kappa, p.gamma_c);
  const auto h = build_hamiltonian(ops, p, g);
  const auto set = exact_moment_equations(ops, p, g);

  std::mt19937_64 rng(77);
  std::normal_distribution<double> nd;
  const std::size_t dim = cfg.dim();
  DenseMatrix psi_rho(dim, dim);
  ComplexVector psi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (cfg.na_of(i) < 3 && cfg.nb_of(i) < 3) psi[i] = {nd(rng), nd(rng)};
  }
  double norm = 0.0;
  for (const auto& v : psi) norm += std::norm(v);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) psi_rho(i, j) = psi[i] * std::conj(psi[j]) / norm;
  const DensityOperator rho(psi_rho);
  const auto drho = lindblad_rhs(rho, h, ops, p.kappa);

  for (const auto& eq : set.equations) {
    CAPTURE(eq.name);
    const cplx lhs = expectation(drho, set.operators[eq.lhs].op);
    cplx rhs = eq.constant;
    for (const auto& [c, k] : eq.rhs) rhs += c * expectation(rho, set.operators[k].op);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}
