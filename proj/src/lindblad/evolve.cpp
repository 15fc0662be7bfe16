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

#include "subharm/lindblad/evolve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>

#include "subharm/csv.hpp"
#include "subharm/lindblad/sector_engine.hpp"
#include "subharm/numerics/kernels.hpp"
#include "subharm/numerics/rk4.hpp"

namespace subharm::lindblad {

namespace {

constexpr cplx kI{0.0, 1.0};

double real_expectation(const DensityOperator& rho, const SparseOperator& o) {
  return expectation(rho, o).real();
}

double variance(const DensityOperator& rho, const SparseOperator& o) {
  const double mean = real_expectation(rho, o);
  return real_expectation(rho, o * o) - mean * mean;
}

}  // namespace

const char* to_string(EvolveStatus s) {
  switch (s) {
    case EvolveStatus::Converged:
      return "converged";
    case EvolveStatus::NotConverged:
      return "not_converged";
    case EvolveStatus::TruncationOverflow:
      return "truncation_overflow";
  }
  return "unknown";
}

double default_time_step(const ModelParams& p) {
  const double g = coupling_from_gamma_c(p.kappa, p.gamma_c);
  return 0.01 / std::max({p.kappa, g, p.epsilon});
}

std::vector<TrackedOperator> standard_tracked_moments(const OperatorSet& ops) {
  const auto& a = ops.a;
  const auto& b = ops.b;
  const auto ad = a.adjoint();
  const auto bd = b.adjoint();
  return {
      {"adag_a", ad * a}, {"a_adag", a * ad}, {"bdag_b", bd * b}, {"b_bdag", b * bd},
      {"ab", a * b},      {"ba", b * a},      {"adag_b", ad * b}, {"b_adag", b * ad},
      {"a_sq", a * a},    {"b_sq", b * b},    {"eta_a", ops.eta_a}, {"eta_b", ops.eta_b},
      {"eta_c", ops.eta_c},
  };
}

EvolveResult evolve_to_steady_state(const HilbertConfig& cfg, const ModelParams& p,
                                    const EvolveOptions& opts,
                                    const std::vector<TrackedOperator>& track) {
  validate_params(p);
  if (!(opts.t_max > 0.0) || !(opts.sample_every > 0.0)) {
    throw numerics::NumericsError(numerics::NumericsErrc::InvalidArgument,
                                  "evolve: t_max and sample interval must be positive");
  }
  const double g = coupling_from_gamma_c(p.kappa, p.gamma_c);
  const auto ops = build_operator_set(cfg);
  const auto h = build_hamiltonian(ops, p, g);
  const SectorEngine engine(ops, h, p.kappa);

  double dt = opts.dt;
  if (dt <= 0.0) {
    // Largest step not above the default that divides the sample interval.
    const double ceiling = default_time_step(p);
    dt = opts.sample_every / std::ceil(opts.sample_every / ceiling * (1.0 - 1e-12));
  }

  std::vector<SectorObservable> observables;
  EvolveResult res;
  for (const auto& t : track) {
    observables.push_back(engine.observable(t.op));
    res.trajectory.labels.push_back(t.label);
  }

  const auto expected = static_cast<std::size_t>(opts.t_max / opts.sample_every);
  const std::size_t check_stride =
      std::max<std::size_t>(1, expected / std::max<std::size_t>(1, opts.positivity_checks));
  const auto& k = kernels::active_kernels();
  res.min_eigenvalue = std::numeric_limits<double>::infinity();
  std::size_t sample = 0;
  double last_norm = std::numeric_limits<double>::infinity();

  auto observer = [&](double t, std::span<const cplx> y, std::span<const cplx> dy) {
    res.max_trace_drift = std::max(res.max_trace_drift, std::abs(engine.trace(y) - 1.0));
    res.max_top_population = std::max(res.max_top_population, engine.top_population(y));
    // Power-of-two samples keep early-stopping runs covered.
    if (sample % check_stride == 0 || std::has_single_bit(sample)) {
      res.min_eigenvalue = std::min(res.min_eigenvalue, engine.min_eigenvalue(y));
      ++res.positivity_samples;
    }
    ++sample;
    if (!observables.empty()) {
      res.trajectory.times.push_back(t);
      auto& row = res.trajectory.values.emplace_back();
      row.reserve(observables.size());
      for (const auto& o : observables) row.push_back(o(y));
    }
    last_norm = std::sqrt(k.max_norm2(dy.size(), dy.data()));
    return !(opts.stop_early && last_norm < opts.tol);
  };

  const auto rhs = [&engine](double, std::span<const cplx> y, std::span<cplx> dy) {
    engine.rhs(y, dy);
  };
  auto run = numerics::rk4_integrate(rhs, engine.pack(DensityOperator::initial_state(cfg)),
                                     {dt, opts.t_max, opts.sample_every}, observer);

  res.t_final = run.t;
  res.derivative_norm = last_norm;
  res.min_eigenvalue = std::min(res.min_eigenvalue, engine.min_eigenvalue(run.state));
  ++res.positivity_samples;
  res.state = engine.unpack(run.state);
  if (res.max_top_population > kTruncationLimit) {
    res.status = EvolveStatus::TruncationOverflow;
  } else if (last_norm < opts.tol) {
    res.status = EvolveStatus::Converged;
  } else {
    res.status = EvolveStatus::NotConverged;
  }
  return res;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  std::vector<std::string> header{"t"};
  for (const auto& l : traj.labels) {
    header.push_back("re_" + l);
    header.push_back("im_" + l);
  }
  csv::Writer w(os);
  w.header(header);
  std::vector<double> row(header.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    row[0] = traj.times[i];
    for (std::size_t j = 0; j < traj.labels.size(); ++j) {
      row[1 + 2 * j] = traj.values[i][j].real();
      row[2 + 2 * j] = traj.values[i][j].imag();
    }
    w.row(row);
  }
}

SimulatedObservables simulated_observables(const DensityOperator& rho, const OperatorSet& ops) {
  const auto ad = ops.a.adjoint();
  const auto bd = ops.b.adjoint();
  const auto c = ops.a + ops.b;
  const auto cd = c.adjoint();
  const auto c_plus = cd + c;
  const auto c_minus = kI * (cd - c);

  SimulatedObservables s;
  s.mean_a = expectation(rho, ops.a);
  s.mean_b = expectation(rho, ops.b);
  const double na = real_expectation(rho, ad * ops.a);
  const double nb = real_expectation(rho, bd * ops.b);
  s.commutator_a = real_expectation(rho, ops.a * ad) - na;
  s.commutator_b = real_expectation(rho, ops.b * bd) - nb;
  s.eta_a = real_expectation(rho, ops.eta_a);
  s.eta_b = real_expectation(rho, ops.eta_b);
  s.eta_c = real_expectation(rho, ops.eta_c);

  const auto& cfg = ops.cfg;
  double top_a = 0.0;
  double top_b = 0.0;
  for (std::size_t i = 0; i < cfg.dim(); ++i) {
    if (cfg.na_of(i) + 1 == cfg.fock_cutoff) top_a += rho.matrix()(i, i).real();
    if (cfg.nb_of(i) + 1 == cfg.fock_cutoff) top_b += rho.matrix()(i, i).real();
  }
  s.top_population = std::max(top_a, top_b);

  auto& o = s.bosonic;
  o.mean_photon = na + nb;
  o.var_plus = variance(rho, c_plus);
  o.var_minus = variance(rho, c_minus);
  o.vacuum_variance = 2.0;
  o.squeezing = 1.0 - o.var_plus / 2.0;
  o.commutator = real_expectation(rho, c * cd) - real_expectation(rho, cd * c);
  o.commutator_from_moments = o.commutator;
  return s;
}

const CutoffRun* ConvergenceReport::selected() const {
  if (!converged) return nullptr;
  for (const auto& r : runs) {
    if (r.cutoff == converged_cutoff) return &r;
  }
  return nullptr;
}

ConvergenceReport convergence_check(const ModelParams& p, std::span<const std::size_t> cutoffs,
                                    const EvolveOptions& opts, double threshold) {
  if (cutoffs.size() < 2) {
    throw LindbladError(LindbladErrc::InvalidConfig, "convergence check needs at least two cutoffs");
  }
  for (std::size_t i = 1; i < cutoffs.size(); ++i) {
    if (cutoffs[i] <= cutoffs[i - 1]) {
      throw LindbladError(LindbladErrc::InvalidConfig, "cutoffs must be strictly increasing");
    }
  }

  ConvergenceReport report;
  for (const std::size_t n : cutoffs) {
    const HilbertConfig cfg{n};
    const auto res = evolve_to_steady_state(cfg, p, opts);
    CutoffRun run;
    run.cutoff = n;
    run.status = res.status;
    run.t_final = res.t_final;
    run.observables = simulated_observables(res.state, build_operator_set(cfg));
    report.runs.push_back(run);
  }

  for (std::size_t i = 0; i + 1 < report.runs.size(); ++i) {
    const auto& x = report.runs[i];
    const auto& y = report.runs[i + 1];
    double change = std::numeric_limits<double>::quiet_NaN();
    if (x.status == EvolveStatus::Converged && y.status == EvolveStatus::Converged) {
      const auto& ox = x.observables.bosonic;
      const auto& oy = y.observables.bosonic;
      change = std::max({std::abs(ox.mean_photon - oy.mean_photon),
                         std::abs(ox.var_plus - oy.var_plus),
                         std::abs(ox.var_minus - oy.var_minus)});
    }
    report.changes.push_back(change);
    if (!report.converged && change < threshold) {
      report.converged = true;
      report.converged_cutoff = y.cutoff;
    }
  }
  return report;
}

}  // namespace subharm::lindblad
