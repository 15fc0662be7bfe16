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

#include "subharm/moment_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace subharm::moments {

namespace {

using numerics::ComplexVector;
using numerics::DenseMatrix;

constexpr double kMaxCondition = 1e14;
constexpr double kCommutatorTolerance = 1e-10;

// Builds rows of the form  x_i - sum c_j x_j - sum d_j conj(x_j) = const
// over complex unknowns split into (re, im) pairs.
class RealSplitBuilder {
 public:
  explicit RealSplitBuilder(std::size_t unknowns) : a_(2 * unknowns, 2 * unknowns), b_(2 * unknowns) {}

  struct Term {
    std::size_t index;
    double coeff;
  };

  void equation(std::size_t i, std::initializer_list<Term> plain,
                std::initializer_list<Term> conjugated, cplx constant) {
    const std::size_t re = 2 * i;
    const std::size_t im = re + 1;
    a_(re, re) += 1.0;
    a_(im, im) += 1.0;
    for (const auto& t : plain) {
      a_(re, 2 * t.index) -= t.coeff;
      a_(im, 2 * t.index + 1) -= t.coeff;
    }
    for (const auto& t : conjugated) {
      a_(re, 2 * t.index) -= t.coeff;
      a_(im, 2 * t.index + 1) += t.coeff;
    }
    b_[re] = constant.real();
    b_[im] = constant.imag();
  }

  DenseMatrix take_matrix() { return std::move(a_); }
  ComplexVector take_rhs() { return std::move(b_); }

 private:
  DenseMatrix a_;
  ComplexVector b_;
};

enum Field : std::size_t { NA, AA, NB, BB, AB, BA, ADB, BAD, ASQ, BSQ };

double relative_gap(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

double LinearSystem::residual(std::span<const cplx> x) const {
  const auto ax = matrix * x;
  double r = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) r = std::max(r, std::abs(ax[i] - rhs[i]));
  return r;
}

LinearSystem assemble_atomic_system(const ModelParams& p) {
  const double e = p.epsilon;
  const double k = p.kappa;
  DenseMatrix a(9, 9);
  ComplexVector b(9);
  // <sigma_a>/(2 eps) - <sigma_b^dag>/kappa = 0
  a(0, 0) = 1.0 / (2.0 * e);
  a(0, 2) = -1.0 / k;
  a(1, 1) = 1.0 / (2.0 * e);
  a(1, 3) = 1.0 / k;
  // <sigma_b> = 0
  a(2, 2) = 1.0;
  a(3, 3) = 1.0;
  // <sigma_c>/(2 eps) + (<eta_b> - <eta_c>)/kappa = 0
  a(4, 4) = 1.0 / (2.0 * e);
  a(4, 7) = 1.0 / k;
  a(4, 8) = -1.0 / k;
  a(5, 5) = 1.0 / (2.0 * e);
  // -(<sigma_c> + <sigma_c^dag>)/kappa + <eta_a>/eps = 0
  a(6, 4) = -2.0 / k;
  a(6, 6) = 1.0 / e;
  // (<sigma_c> + <sigma_c^dag>)/kappa + (<eta_b> - <eta_a>)/eps = 0
  a(7, 4) = 2.0 / k;
  a(7, 7) = 1.0 / e;
  a(7, 6) = -1.0 / e;
  // completeness replaces the dependent eta_c row
  a(8, 6) = 1.0;
  a(8, 7) = 1.0;
  a(8, 8) = 1.0;
  b[8] = 1.0;
  return {std::move(a), std::move(b), {kAtomicUnknownNames.begin(), kAtomicUnknownNames.end()}};
}

AtomicMoments solve_atomic_steady_state(const ModelParams& p) {
  AtomicMoments m;
  if (p.epsilon == 0.0) {
    m.degenerate_pump = true;
    return m;
  }
  const auto sys = assemble_atomic_system(p);
  const auto x = numerics::lu_solve(sys.matrix, sys.rhs);
  m.sigma_a = {x[0].real(), x[1].real()};
  m.sigma_b = {x[2].real(), x[3].real()};
  m.sigma_c = {x[4].real(), x[5].real()};
  m.eta_a = x[6].real();
  m.eta_b = x[7].real();
  m.eta_c = x[8].real();
  return m;
}

LinearSystem assemble_field_system(const ModelParams& p, const AtomicMoments& atoms) {
  const double e = p.epsilon;
  const double k = p.kappa;
  const double r = e / k;
  // 4 g^2 / (kappa^2 - 4 eps^2) with 4 g^2 = kappa * gamma_c
  const double g4 = k * p.gamma_c / (k * k - 4.0 * e * e);
  const double coherence_sum = 2.0 * atoms.sigma_c.real();

  RealSplitBuilder sys(10);
  sys.equation(NA, {{BA, -r}}, {{BA, -r}}, -g4 * (e * coherence_sum / k - atoms.eta_a));
  sys.equation(AA, {{AB, -r}}, {{AB, -r}}, g4 * atoms.eta_b + 1.0);
  sys.equation(NB, {{AB, -r}}, {{AB, -r}}, g4 * atoms.eta_b);
  sys.equation(BB, {{BA, -r}}, {{BA, -r}}, -g4 * (e * coherence_sum / k - atoms.eta_c) + 1.0);
  sys.equation(AB, {{NA, -r}, {NB, -r}}, {}, -g4 * 2.0 * e * atoms.eta_b / k - r);
  sys.equation(BA, {{NA, -r}, {NB, -r}}, {},
               -g4 * (e * (atoms.eta_a + atoms.eta_c) / k - atoms.sigma_c) - r);
  // <a b^dag> = conj<b a^dag>, <b^dag a> = conj<a^dag b>
  sys.equation(ASQ, {}, {{BAD, -r}, {ADB, -r}}, 0.0);
  sys.equation(BSQ, {{BAD, -r}, {ADB, -r}}, {}, 0.0);
  sys.equation(ADB, {{BSQ, -r}}, {{ASQ, -r}}, 0.0);
  sys.equation(BAD, {{BSQ, -r}}, {{ASQ, -r}}, 0.0);

  std::vector<std::string> labels;
  for (const char* name : kFieldMomentNames) {
    labels.push_back(std::string("re_") + name);
    labels.push_back(std::string("im_") + name);
  }
  return {sys.take_matrix(), sys.take_rhs(), std::move(labels)};
}

ComplexVector pack(const FieldMoments& m) {
  const std::array<cplx, 10> z = {m.n_a, m.anti_a, m.n_b, m.anti_b, m.ab,
                                  m.ba,  m.adag_b, m.b_adag, m.a_sq, m.b_sq};
  ComplexVector x(20);
  for (std::size_t i = 0; i < z.size(); ++i) {
    x[2 * i] = z[i].real();
    x[2 * i + 1] = z[i].imag();
  }
  return x;
}

FieldMoments unpack_field(std::span<const cplx> x) {
  auto at = [&](std::size_t i) { return cplx{x[2 * i].real(), x[2 * i + 1].real()}; };
  FieldMoments m;
  m.n_a = at(NA).real();
  m.anti_a = at(AA).real();
  m.n_b = at(NB).real();
  m.anti_b = at(BB).real();
  m.ab = at(AB);
  m.ba = at(BA);
  m.adag_b = at(ADB);
  m.b_adag = at(BAD);
  m.a_sq = at(ASQ);
  m.b_sq = at(BSQ);
  return m;
}

FieldMoments solve_field_moments(const LinearSystem& sys) {
  const double cond = numerics::condition_number_1(sys.matrix);
  if (!(cond <= kMaxCondition)) {
    std::ostringstream os;
    os << "field moment system is numerically singular (condition estimate " << cond
       << "); epsilon at or beyond kappa/2";
    throw MomentSolverError(MomentErrc::SingularSystem, os.str());
  }
  const auto x = numerics::lu_solve(sys.matrix, sys.rhs);
  return unpack_field(x);
}

Observables observables_from_moments(const FieldMoments& m, const AtomicMoments& atoms,
                                     const ModelParams& p) {
  const double k = p.kappa;
  const double e = p.epsilon;
  Observables o;
  o.mean_photon = m.n_a + m.n_b;
  const double normal_plus_anti = o.mean_photon + m.anti_a + m.anti_b;
  // <c^2> = <ab> + <ba> once <a^2> = <b^2> = 0
  const double pair = 2.0 * (m.ab + m.ba).real();
  o.var_plus = normal_plus_anti + pair;
  o.var_minus = normal_plus_anti - pair;
  o.vacuum_variance = 2.0 + p.gamma_c / k;
  o.squeezing = (o.vacuum_variance - o.var_plus) / o.vacuum_variance;
  o.commutator = 2.0 + k * p.gamma_c * (atoms.eta_c - atoms.eta_a) / (k * k - 4.0 * e * e);
  o.commutator_from_moments = (m.anti_a + m.anti_b) - (m.n_a + m.n_b);
  if (relative_gap(o.commutator, o.commutator_from_moments) > kCommutatorTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "commutator routes disagree: " << o.commutator << " vs " << o.commutator_from_moments;
    throw MomentSolverError(MomentErrc::InconsistentInputs, os.str());
  }
  return o;
}

SteadyState solve_steady_state(const ModelParams& p) {
  SteadyState s;
  s.atoms = solve_atomic_steady_state(p);
  const auto sys = assemble_field_system(p, s.atoms);
  s.field = solve_field_moments(sys);
  s.residual = sys.residual(pack(s.field));
  s.observables = observables_from_moments(s.field, s.atoms, p);
  return s;
}

}  // namespace subharm::moments
