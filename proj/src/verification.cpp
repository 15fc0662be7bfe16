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

#include "subharm/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "subharm/analytic.hpp"
#include "subharm/csv.hpp"
#include "subharm/figures.hpp"
#include "subharm/lindblad.hpp"
#include "subharm/moment_solver.hpp"

namespace subharm::verification {

namespace {

using csv::format_number;
using Clock = std::chrono::steady_clock;

constexpr double kKappa = 0.8;
const std::vector<double> kGammaFamily = {0.0, 0.25, 0.5};
constexpr SweepGrid kAcceptanceGrid{0.0, 0.38, 50};

bool evaluate(const Check& c) {
  const double m = c.measured;
  if (std::isnan(m)) return false;
  if (c.relation == "<") return m < c.bound;
  if (c.relation == "<=") return m <= c.bound;
  if (c.relation == ">") return m > c.bound;
  if (c.relation == ">=") return m >= c.bound;
  if (c.relation == "==") return m == c.bound;
  if (c.relation == "in") return m >= c.bound && m <= c.upper;
  return false;
}

Check make(std::string name, double measured, std::string relation, double bound,
           std::string detail = {}, double upper = 0.0) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.relation = std::move(relation);
  c.bound = bound;
  c.upper = upper;
  c.detail = std::move(detail);
  c.pass = evaluate(c);
  return c;
}

/// Relative error with a floor on the reference scale, so that points where
/// both sides vanish exactly compare absolutely.
double rel_err(double x, double ref) {
  return std::abs(x - ref) / std::max(std::abs(ref), 1e-6);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Tracks the worst value of a check and where it happened.
struct Worst {
  double value = 0.0;
  std::string where;

  void update(double v, const ModelParams& p) {
    if (std::isnan(value)) return;
    if (std::isnan(v) || where.empty() || v > value) {
      value = v;
      where = "eps=" + format_number(p.epsilon) + " gamma_c=" + format_number(p.gamma_c);
    }
  }
};

double no_atom_photons(double e, double k) { return 4.0 * e * e / (k * k - 4.0 * e * e); }
double no_atom_squeezing(double e, double k) { return 2.0 * e / (k + 2.0 * e); }

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) s += ", ";
    s += format_number(xs[i]);
  }
  return s;
}

}  // namespace

bool CriterionResult::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* CriterionResult::headline() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return checks.empty() ? nullptr : &checks.front();
}

CriterionResult double_entry_steady_state() {
  CriterionResult r{1, "double-entry steady state: closed forms vs linear-system pipeline", {}, 0.0};
  const auto t0 = Clock::now();
  Worst atoms, photons, occupations, anti, variances, squeeze, commutator, completeness;
  for (const double gc : kGammaFamily) {
    for (std::size_t i = 0; i < kAcceptanceGrid.steps; ++i) {
      const auto p = validate_params({kAcceptanceGrid.at(i), kKappa, gc});
      const auto s = moments::solve_steady_state(p);
      const auto a = analytic::atomic_steady_state(p);
      const auto n = analytic::mode_occupations(p);
      const auto aa = analytic::anti_normal_moments(p);
      const auto v = analytic::quadrature_variances(p);

      atoms.update(std::max({rel_err(a.eta_a, s.atoms.eta_a), rel_err(a.eta_c, s.atoms.eta_c),
                             rel_err(a.sigma_c, s.atoms.sigma_c.real()),
                             std::abs(a.eta_b - s.atoms.eta_b)}),
                   p);
      photons.update(rel_err(analytic::mean_photon_number(p), s.observables.mean_photon), p);
      occupations.update(
          std::max(rel_err(n.n_a, s.field.n_a), rel_err(n.n_b, s.field.n_b)), p);
      anti.update(std::max(rel_err(aa.n_a, s.field.anti_a), rel_err(aa.n_b, s.field.anti_b)), p);
      variances.update(std::max(rel_err(v.var_plus, s.observables.var_plus),
                                rel_err(v.var_minus, s.observables.var_minus)),
                       p);
      squeeze.update(rel_err(analytic::squeezing(p), s.observables.squeezing), p);
      commutator.update(
          rel_err(analytic::commutator_expectation(p), s.observables.commutator_from_moments), p);
      completeness.update(std::abs(s.atoms.eta_a + s.atoms.eta_b + s.atoms.eta_c - 1.0), p);
    }
  }
  r.seconds = seconds_since(t0);
  const std::string grid = "150 points, worst at ";
  r.checks.push_back(make("atomic_steady_state vs moment oracle", atoms.value, "<", 1e-10,
                          grid + atoms.where));
  r.checks.push_back(make("mean_photon_number vs moment oracle", photons.value, "<", 1e-10,
                          grid + photons.where));
  r.checks.push_back(make("mode_occupations vs moment oracle", occupations.value, "<", 1e-10,
                          grid + occupations.where));
  r.checks.push_back(make("anti_normal_moments vs moment oracle", anti.value, "<", 1e-10,
                          grid + anti.where));
  r.checks.push_back(make("quadrature_variances vs moment oracle", variances.value, "<", 1e-10,
                          grid + variances.where));
  r.checks.push_back(make("squeezing vs moment oracle", squeeze.value, "<", 1e-10,
                          grid + squeeze.where));
  r.checks.push_back(make("commutator_expectation vs moment-route commutator", commutator.value,
                          "<", 1e-10, grid + commutator.where));
  r.checks.push_back(make("completeness |eta_a + eta_b + eta_c - 1|", completeness.value, "<",
                          1e-14, grid + completeness.where));
  r.checks.push_back(make("runtime [s]", r.seconds, "<", 1.0));
  return r;
}

CriterionResult reduction_identities() {
  CriterionResult r{2, "reduction identities", {}, 0.0};
  const auto t0 = Clock::now();
  Worst photons, squeeze, vacuum_solver, vanishing;
  double vacuum_exact = 0.0;
  for (std::size_t i = 0; i < kAcceptanceGrid.steps; ++i) {
    const double e = kAcceptanceGrid.at(i);
    const auto p = validate_params({e, kKappa, 0.0});
    const auto s = moments::solve_steady_state(p);
    const double n0 = no_atom_photons(e, kKappa);
    const double s0 = no_atom_squeezing(e, kKappa);
    photons.update(std::max(std::abs(analytic::mean_photon_number(p) - n0),
                            std::abs(s.observables.mean_photon - n0)) /
                       std::max(1.0, n0),
                   p);
    squeeze.update(std::max(std::abs(analytic::squeezing(p) - s0),
                            std::abs(s.observables.squeezing - s0)),
                   p);
  }
  for (const double gc : kGammaFamily) {
    const auto p = validate_params({0.0, kKappa, gc});
    const double vac = 2.0 + gc / kKappa;
    const auto v = analytic::quadrature_variances(p);
    vacuum_exact = std::max({vacuum_exact, std::abs(v.var_plus - vac), std::abs(v.var_minus - vac),
                             std::abs(analytic::vacuum_variance(p) - vac)});
    const auto s = moments::solve_steady_state(p);
    vacuum_solver.update(std::max(std::abs(s.observables.var_plus - vac),
                                  std::abs(s.observables.var_minus - vac)),
                         p);
    for (std::size_t i = 0; i < kAcceptanceGrid.steps; ++i) {
      const auto q = validate_params({kAcceptanceGrid.at(i), kKappa, gc});
      const auto f = moments::solve_steady_state(q);
      vanishing.update(std::max({std::abs(f.field.a_sq), std::abs(f.field.b_sq),
                                 std::abs(f.field.adag_b), std::abs(f.field.b_adag),
                                 std::abs(f.atoms.eta_b), std::abs(f.atoms.sigma_a),
                                 std::abs(f.atoms.sigma_b)}),
                       q);
    }
  }
  r.seconds = seconds_since(t0);
  r.checks.push_back(make("gamma_c=0 mean photon number vs 4 eps^2/(k^2-4 eps^2)", photons.value,
                          "<", 1e-13, "closed form and moment solver, worst at " + photons.where));
  r.checks.push_back(make("gamma_c=0 squeezing vs 2 eps/(k+2 eps)", squeeze.value, "<", 1e-13,
                          "closed form and moment solver, worst at " + squeeze.where));
  r.checks.push_back(make("eps=0 closed-form variances vs 2 + gamma_c/k", vacuum_exact, "==", 0.0,
                          "gamma_c in {" + join(kGammaFamily) + "}"));
  r.checks.push_back(make("eps=0 moment-solver variances vs 2 + gamma_c/k", vacuum_solver.value,
                          "<", 1e-13, "worst at " + vacuum_solver.where));
  r.checks.push_back(make("vanishing moments <a^2>, <b^2>, <a^dag b>, <b a^dag>, eta_b, "
                          "sigma_a, sigma_b",
                          vanishing.value, "<", 1e-12, "worst at " + vanishing.where));
  return r;
}

CriterionResult point_checks() {
  CriterionResult r{3, "point checks at eps=0.3, kappa=0.8, gamma_c=0.5", {}, 0.0};
  const auto t0 = Clock::now();
  const auto p = validate_params({0.3, kKappa, 0.5});
  const auto s = moments::solve_steady_state(p);
  const auto o = analytic::observables(p);
  const auto n = analytic::mode_occupations(p);
  struct Ref {
    const char* name;
    double expected;
    double closed_form;
    double solver;
  };
  const Ref refs[] = {
      {"mean photon number", 1.028571, o.mean_photon, s.observables.mean_photon},
      {"n_a", 0.458035, n.n_a, s.field.n_a},
      {"n_b", 0.570536, n.n_b, s.field.n_b},
      {"var_plus", 1.714286, o.var_plus, s.observables.var_plus},
      {"var_minus", 7.2, o.var_minus, s.observables.var_minus},
      {"squeezing", 0.346939, o.squeezing, s.observables.squeezing},
      {"uncertainty bound", 2.4, analytic::uncertainty_bound(p),
       s.observables.commutator_from_moments},
  };
  for (const auto& ref : refs) {
    r.checks.push_back(make(std::string(ref.name) + " (closed form)",
                            std::abs(ref.closed_form - ref.expected), "<", 1e-5,
                            "value " + format_number(ref.closed_form) + ", expected " +
                                format_number(ref.expected)));
    r.checks.push_back(make(std::string(ref.name) + " (moment solver)",
                            std::abs(ref.solver - ref.expected), "<", 1e-5,
                            "value " + format_number(ref.solver) + ", expected " +
                                format_number(ref.expected)));
  }
  r.seconds = seconds_since(t0);
  return r;
}

CriterionResult closed_form_claims() {
  CriterionResult r{4, "closed-form claims as properties", {}, 0.0};
  const auto t0 = Clock::now();
  const std::vector<double> gammas = {0.0, 0.125, 0.25, 0.375, 0.5, 0.75, 1.0};
  double photon_step = -std::numeric_limits<double>::infinity();
  double squeeze_step = -std::numeric_limits<double>::infinity();
  double max_squeeze = 0.0;
  double plus_margin = -std::numeric_limits<double>::infinity();
  constexpr std::size_t points = 80;
  const double top = 0.399;
  for (std::size_t i = 1; i <= points; ++i) {
    const double e = top * static_cast<double>(i) / static_cast<double>(points);
    double prev_n = 0.0;
    double prev_s = 0.0;
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      const auto p = validate_params({e, kKappa, gammas[j]});
      const double n = analytic::mean_photon_number(p);
      const double s = analytic::squeezing(p);
      if (j != 0) {
        photon_step = std::max(photon_step, n - prev_n);
        squeeze_step = std::max(squeeze_step, s - prev_s);
      }
      prev_n = n;
      prev_s = s;
      max_squeeze = std::max(max_squeeze, s);
      plus_margin =
          std::max(plus_margin, analytic::quadrature_variances(p).var_plus - analytic::vacuum_variance(p));
    }
  }
  const double near_threshold = analytic::squeezing(validate_params({0.399, kKappa, 0.0}));
  r.seconds = seconds_since(t0);
  const std::string where = "eps in (0, 0.399], gamma_c in {" + join(gammas) + "}";
  r.checks.push_back(make("mean photon number strictly decreasing in gamma_c (largest step)",
                          photon_step, "<", 0.0, where));
  r.checks.push_back(make("squeezing strictly decreasing in gamma_c (largest step)", squeeze_step,
                          "<", 0.0, where));
  r.checks.push_back(make("squeezing below one half (largest value)", max_squeeze, "<", 0.5, where));
  r.checks.push_back(make("squeezing at eps=0.399, gamma_c=0", near_threshold, ">", 0.49));
  r.checks.push_back(make("var_plus below vacuum level for eps > 0 (largest var_plus - vacuum)",
                          plus_margin, "<", 0.0, where));
  return r;
}

CriterionResult exact_ode_oracle() {
  CriterionResult r{5, "exact moment equations along a master-equation trajectory", {}, 0.0};
  const auto t0 = Clock::now();
  const ModelParams p = validate_params({0.2, kKappa, 0.1});
  const double g = coupling_from_gamma_c(p.kappa, p.gamma_c);
  const lindblad::HilbertConfig cfg{8};
  const auto ops = lindblad::build_operator_set(cfg);
  const auto equations = lindblad::exact_moment_equations(ops, p, g);

  constexpr double h = 0.05;
  lindblad::EvolveOptions opts;
  opts.t_max = 200.0 / p.kappa;
  opts.dt = 1e-3;
  opts.sample_every = h / 2.0;
  opts.stop_early = false;
  opts.positivity_checks = 20;
  const auto run = lindblad::evolve_to_steady_state(cfg, p, opts, equations.operators);
  const auto coarse = lindblad::moment_residuals(run.trajectory, equations, 2);
  const auto fine = lindblad::moment_residuals(run.trajectory, equations, 1);
  r.seconds = seconds_since(t0);

  // Residuals that vanish by the charge symmetry carry no finite-difference
  // error to halve.
  constexpr double floor = 1e-9;
  for (std::size_t i = 0; i < coarse.entries.size(); ++i) {
    const auto& c = coarse.entries[i];
    const auto& f = fine.entries[i];
    r.checks.push_back(make("residual " + c.name + " at h=" + format_number(coarse.spacing),
                            c.max_residual, "<", 1e-4));
    if (c.max_residual < floor && f.max_residual < floor) {
      r.checks.push_back(make("halving ratio " + c.name, c.max_residual, "<", floor,
                              "both residuals below floor; vanishes by symmetry"));
    } else {
      const double ratio = c.max_residual / f.max_residual;
      r.checks.push_back(make("halving ratio " + c.name, ratio, "in", 3.0,
                              "h=" + format_number(coarse.spacing) + ": " +
                                  format_number(c.max_residual) + ", h=" +
                                  format_number(fine.spacing) + ": " + format_number(f.max_residual),
                              5.0));
    }
  }
  r.checks.push_back(make("trace drift", run.max_trace_drift, "<", 1e-8));
  r.checks.push_back(make("min eigenvalue over sampled states", run.min_eigenvalue, ">=", -1e-8,
                          format_number(static_cast<double>(run.positivity_samples)) + " samples"));
  r.checks.push_back(make("positivity samples", static_cast<double>(run.positivity_samples), ">=",
                          5.0));
  return r;
}

CriterionResult simulation_vs_theory() {
  CriterionResult r{6, "simulation vs closed forms (gamma_c=0) and gamma_c trend", {}, 0.0};
  const auto t0 = Clock::now();
  lindblad::EvolveOptions opts;
  opts.t_max = 2000.0;
  opts.sample_every = 0.5;
  opts.tol = 1e-8;

  struct Point {
    double epsilon;
    std::vector<std::size_t> cutoffs;
  };
  const Point points[] = {{0.1, {4, 6, 8}}, {0.2, {8, 10, 12}}, {0.3, {14, 16, 18, 20}}};
  for (const auto& pt : points) {
    const auto p = validate_params({pt.epsilon, kKappa, 0.0});
    const auto report = lindblad::convergence_check(p, pt.cutoffs, opts);
    const std::string tag = "eps=" + format_number(pt.epsilon);
    std::string changes;
    for (std::size_t i = 0; i < report.changes.size(); ++i) {
      changes += (i ? ", " : "") + std::to_string(report.runs[i].cutoff) + "->" +
                 std::to_string(report.runs[i + 1].cutoff) + ": " +
                 format_number(report.changes[i]);
    }
    r.checks.push_back(make("cutoff convergence " + tag,
                            report.converged ? static_cast<double>(report.converged_cutoff) : std::numeric_limits<double>::quiet_NaN(),
                            ">=", 2.0, "changes " + changes));
    const auto* run = report.selected();
    const double n_ref = no_atom_photons(pt.epsilon, kKappa);
    const double v_ref = 2.0 - 4.0 * pt.epsilon / (kKappa + 2.0 * pt.epsilon);
    const double n_sim = run ? run->observables.bosonic.mean_photon : std::numeric_limits<double>::quiet_NaN();
    const double v_sim = run ? run->observables.bosonic.var_plus : std::numeric_limits<double>::quiet_NaN();
    const std::string at_n = run ? "N=" + std::to_string(run->cutoff) + ", " : "";
    r.checks.push_back(make("mean photon number " + tag + " relative gap", rel_err(n_sim, n_ref),
                            "<", 0.05,
                            at_n + "simulated " + format_number(n_sim) + ", closed form " +
                                format_number(n_ref)));
    r.checks.push_back(make("var_plus " + tag + " relative gap", rel_err(v_sim, v_ref), "<", 0.05,
                            at_n + "simulated " + format_number(v_sim) + ", closed form " +
                                format_number(v_ref)));
  }

  // gamma_c > 0: directions only; the closed forms use a different ordering
  // convention for the vacuum level.
  const std::vector<double> gammas = {0.0, 0.25, 0.5};
  const lindblad::HilbertConfig cfg{10};
  const auto ops = lindblad::build_operator_set(cfg);
  std::vector<double> photons, squeezing, photons_cf, squeezing_cf;
  bool all_converged = true;
  for (const double gc : gammas) {
    const auto p = validate_params({0.2, kKappa, gc});
    const auto run = lindblad::evolve_to_steady_state(cfg, p, opts);
    all_converged = all_converged && run.status == lindblad::EvolveStatus::Converged;
    const auto sim = lindblad::simulated_observables(run.state, ops);
    photons.push_back(sim.bosonic.mean_photon);
    squeezing.push_back(sim.bosonic.squeezing);
    photons_cf.push_back(analytic::mean_photon_number(p));
    squeezing_cf.push_back(analytic::squeezing(p));
  }
  double photon_step = -std::numeric_limits<double>::infinity();
  double squeeze_step = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < gammas.size(); ++i) {
    photon_step = std::max(photon_step, photons[i] - photons[i - 1]);
    squeeze_step = std::max(squeeze_step, squeezing[i] - squeezing[i - 1]);
  }
  r.seconds = seconds_since(t0);
  const std::string where = "eps=0.2, N=10, gamma_c in {" + join(gammas) + "}";
  r.checks.push_back(make("trend runs converged", all_converged ? 1.0 : 0.0, "==", 1.0, where));
  r.checks.push_back(make("simulated mean photon number decreasing in gamma_c (largest step)",
                          photon_step, "<", 0.0,
                          "simulated {" + join(photons) + "}, closed form {" + join(photons_cf) +
                              "}"));
  r.checks.push_back(make("simulated squeezing 1 - var_plus/2 decreasing in gamma_c (largest step)",
                          squeeze_step, "<", 0.0,
                          "simulated {" + join(squeezing) + "}, closed form {" +
                              join(squeezing_cf) + "}"));
  return r;
}

CriterionResult determinism(
    const std::vector<std::pair<std::string, std::function<std::string()>>>& producers) {
  CriterionResult r{7, "determinism: repeated CSV output is byte-identical", {}, 0.0};
  const auto t0 = Clock::now();
  for (const auto& [label, produce] : producers) {
    const std::string first = produce();
    const std::string second = produce();
    std::size_t diff = 0;
    if (first != second) {
      const auto m = std::mismatch(first.begin(), first.end(), second.begin(), second.end());
      diff = static_cast<std::size_t>(m.first - first.begin()) + 1;
    }
    r.checks.push_back(make(label + " first differing byte (0 = identical)",
                            static_cast<double>(diff), "==", 0.0,
                            format_number(static_cast<double>(first.size())) + " bytes"));
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<std::pair<std::string, std::function<std::string()>>> cli_producers() {
  using figures::kDefaultGammaC;
  using figures::kDefaultGrid;
  using figures::kDefaultKappa;
  return {
      {"figure2",
       [] {
         std::ostringstream os;
         figures::write_figure2(os, kDefaultKappa, figures::kDefaultFigure2Family, kDefaultGrid);
         return os.str();
       }},
      {"figure3",
       [] {
         std::ostringstream os;
         figures::write_figure3(os, kDefaultKappa, kDefaultGammaC, kDefaultGrid);
         return os.str();
       }},
      {"figure4",
       [] {
         std::ostringstream os;
         figures::write_figure4(os, kDefaultKappa, kDefaultGammaC, kDefaultGrid);
         return os.str();
       }},
      {"sweep",
       [] {
         std::ostringstream os;
         figures::write_sweep(os, kDefaultKappa, kDefaultGammaC, kDefaultGrid);
         return os.str();
       }},
      {"simulate",
       [] {
         std::ostringstream csv_out, summary;
         lindblad::EvolveOptions opts;
         opts.t_max = 5.0;
         opts.sample_every = 0.05;
         figures::run_simulate({0.2, kDefaultKappa, 0.1}, 4, opts, csv_out, summary);
         return csv_out.str() + summary.str();
       }},
  };
}

void print_report(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    os << "criterion " << r.id << ": " << r.title << " [" << (r.pass() ? "PASS" : "FAIL") << ", "
       << format_number(r.seconds) << " s]\n";
    for (const auto& c : r.checks) {
      os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << format_number(c.measured)
         << ' ' << c.relation << ' ';
      if (c.relation == "in") {
        os << '[' << format_number(c.bound) << ", " << format_number(c.upper) << ']';
      } else {
        os << format_number(c.bound);
      }
      if (!c.detail.empty()) os << "  (" << c.detail << ')';
      os << '\n';
    }
  }
}

void print_summary(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    os << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title;
    if (const auto* h = r.headline(); h != nullptr && !r.pass()) {
      os << " -- failed: " << h->name << " = " << format_number(h->measured);
    }
    os << " (" << r.checks.size() << " checks, " << format_number(r.seconds) << " s)\n";
  }
}

}  // namespace subharm::verification
