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

#include "subharm/analytic.hpp"
#include "subharm/moment_solver.hpp"

using namespace subharm;

namespace {

constexpr double kKappa = 0.8;

std::vector<double> pump_grid(double kappa, std::size_t n, double fraction_of_threshold) {
  std::vector<double> out;
  const double top = fraction_of_threshold * 0.5 * kappa;
  for (std::size_t i = 0; i < n; ++i) out.push_back(top * double(i) / double(n - 1));
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Independent transcription of the expanded squeezing expression, kept here
// so a drift in the library's derivation from var_plus is caught.
double squeezing_expanded(double e, double k, double gc) {
  const double e2 = e * e;
  const double bracket = 4.0 * e2 * (8.0 * e2 + k * k - 6.0 * e * k) + k * k * k * (k - 2.0 * e) +
                         4.0 * e * k * (k * (k - 4.0 * e) + 4.0 * e2);
  const double tail = k * gc / ((k * k + 4.0 * e2) * std::pow(k * k - 4.0 * e2, 2)) * bracket;
  return 1.0 - k / (gc + 2.0 * k) * (2.0 - 4.0 * e / (k + 2.0 * e) + tail);
}

double mean_photon_direct(double e, double k, double gc) {
  return 2.0 * e * e / (k * k - 4.0 * e * e) * (2.0 - k * gc / (k * k + 4.0 * e * e));
}

}  // namespace

TEST_CASE("atomic steady state: unpumped atom sits in the bottom level") {
  const auto s = analytic::atomic_steady_state({0.0, kKappa, 0.5});
  CHECK(s.eta_a == 0.0);
  CHECK(s.eta_b == 0.0);
  CHECK(s.eta_c == 1.0);
  CHECK(s.sigma_c == 0.0);
}

TEST_CASE("atomic steady state against the linear-system oracle") {
  struct Case {
    double eps, eta_a, eta_c, sigma_c;
  };
  for (const Case c : {Case{0.3, 0.36, 0.64, 0.48}, Case{0.2, 0.2, 0.8, 0.4}}) {
    CAPTURE(c.eps);
    const ModelParams p{c.eps, kKappa, 0.5};
    const auto s = analytic::atomic_steady_state(p);
    const auto oracle = moments::solve_atomic_steady_state(p);
    CHECK(rel(s.eta_a, oracle.eta_a) < 1e-12);
    CHECK(std::abs(s.eta_b - oracle.eta_b) < 1e-14);
    CHECK(rel(s.eta_c, oracle.eta_c) < 1e-12);
    CHECK(rel(s.sigma_c, oracle.sigma_c.real()) < 1e-12);
    CHECK(s.eta_a == doctest::Approx(c.eta_a).epsilon(1e-12));
    CHECK(s.eta_c == doctest::Approx(c.eta_c).epsilon(1e-12));
    CHECK(s.sigma_c == doctest::Approx(c.sigma_c).epsilon(1e-12));
  }
}

TEST_CASE("mean photon number against the moment oracle") {
  for (const double gc : {0.0, 0.5}) {
    const ModelParams p{0.3, kKappa, gc};
    const double n = analytic::mean_photon_number(p);
    CHECK(rel(n, moments::solve_steady_state(p).observables.mean_photon) < 1e-10);
  }
  CHECK(analytic::mean_photon_number({0.3, kKappa, 0.0}) == doctest::Approx(1.285714).epsilon(1e-6));
  CHECK(analytic::mean_photon_number({0.3, kKappa, 0.5}) == doctest::Approx(1.028571).epsilon(1e-6));
  CHECK(analytic::mean_photon_number({0.0, kKappa, 0.5}) == 0.0);
}

TEST_CASE("mean photon number matches the rational closed form") {
  for (const double gc : {0.0, 0.25, 0.5, 1.0}) {
    for (const double e : pump_grid(kKappa, 20, 0.95)) {
      CHECK(std::abs(analytic::mean_photon_number({e, kKappa, gc}) - mean_photon_direct(e, kKappa, gc)) <
            1e-13 * (1.0 + mean_photon_direct(e, kKappa, gc)));
    }
  }
}

TEST_CASE("mode occupations split the total") {
  const ModelParams p{0.3, kKappa, 0.5};
  const auto n = analytic::mode_occupations(p);
  CHECK(n.n_a == doctest::Approx(0.458035).epsilon(1e-6));
  CHECK(n.n_b == doctest::Approx(0.570536).epsilon(1e-6));
  CHECK(n.n_a + n.n_b == doctest::Approx(analytic::mean_photon_number(p)).epsilon(1e-14));
  const auto sym = analytic::mode_occupations({0.3, kKappa, 0.0});
  CHECK(sym.n_a == doctest::Approx(0.642857).epsilon(1e-6));
  CHECK(sym.n_a == sym.n_b);
}

TEST_CASE("quadrature variances at the figure point") {
  const ModelParams p{0.3, kKappa, 0.5};
  const auto v = analytic::quadrature_variances(p);
  const auto oracle = moments::solve_steady_state(p).observables;
  CHECK(rel(v.var_plus, oracle.var_plus) < 1e-10);
  CHECK(rel(v.var_minus, oracle.var_minus) < 1e-10);
  CHECK(v.var_plus == doctest::Approx(1.714286).epsilon(1e-6));
  CHECK(v.var_minus == doctest::Approx(7.2).epsilon(1e-12));
}

TEST_CASE("squeezing: library vs expanded transcription") {
  for (const double gc : {0.0, 0.25, 0.5, 1.0, 3.0}) {
    for (const double e : pump_grid(kKappa, 50, 0.99)) {
      const ModelParams p{e, kKappa, gc};
      CHECK(std::abs(analytic::squeezing(p) - squeezing_expanded(e, kKappa, gc)) < 1e-12);
    }
  }
  CHECK(analytic::squeezing({0.3, kKappa, 0.5}) == doctest::Approx(0.346939).epsilon(1e-6));
  CHECK(analytic::squeezing({0.3, kKappa, 0.0}) == doctest::Approx(0.428571).epsilon(1e-6));
}

TEST_CASE("uncertainty bound values") {
  CHECK(analytic::uncertainty_bound({0.3, kKappa, 0.5}) == doctest::Approx(2.4).epsilon(1e-14));
  CHECK(analytic::uncertainty_bound({0.0, kKappa, 0.0}) == 2.0);
  CHECK(analytic::uncertainty_bound({0.2, kKappa, 0.5}) == doctest::Approx(2.5).epsilon(1e-14));
  const auto v = analytic::quadrature_variances({0.3, kKappa, 0.5});
  CHECK(std::sqrt(v.var_plus * v.var_minus) == doctest::Approx(3.51324).epsilon(1e-6));
  CHECK(analytic::commutator_expectation({0.2, kKappa, 0.5}) ==
        doctest::Approx(moments::solve_steady_state({0.2, kKappa, 0.5}).observables.commutator)
            .epsilon(1e-12));
}

TEST_CASE("property: populations are complete and bounded") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double kappa = 0.05 + 5.0 * u(rng);
    const ModelParams p{0.5 * kappa * u(rng) * 0.999, kappa, 4.0 * u(rng)};
    const auto s = analytic::atomic_steady_state(p);
    CHECK(std::abs(s.eta_a + s.eta_b + s.eta_c - 1.0) < 1e-14);
    CHECK(s.eta_b == 0.0);
    CHECK(s.eta_a >= 0.0);
    CHECK(s.eta_c <= 1.0);
    CHECK(std::abs(s.eta_c * 4.0 * p.epsilon * p.epsilon - s.eta_a * kappa * kappa) < 1e-14);
  }
}

TEST_CASE("property: no-atom reduction over 50 pump rates") {
  for (const double e : pump_grid(kKappa, 50, 0.99)) {
    const ModelParams p{e, kKappa, 0.0};
    const double n_ref = 4.0 * e * e / (kKappa * kKappa - 4.0 * e * e);
    const double s_ref = 2.0 * e / (kKappa + 2.0 * e);
    if (e == 0.0) {
      CHECK(analytic::mean_photon_number(p) == 0.0);
      CHECK(analytic::squeezing(p) == 0.0);
    } else {
      CHECK(rel(analytic::mean_photon_number(p), n_ref) < 1e-13);
      CHECK(rel(analytic::squeezing(p), s_ref) < 1e-13);
    }
  }
}

TEST_CASE("property: vacuum limit") {
  for (const double gc : {0.0, 0.1, 0.5, 2.0, 10.0}) {
    for (const double kappa : {0.3, 0.8, 2.0}) {
      const ModelParams p{0.0, kappa, gc};
      const auto v = analytic::quadrature_variances(p);
      CHECK(v.var_plus == 2.0 + gc / kappa);
      CHECK(v.var_minus == 2.0 + gc / kappa);
      CHECK(analytic::vacuum_variance(p) == 2.0 + gc / kappa);
      CHECK(analytic::squeezing(p) == 0.0);
    }
  }
}

TEST_CASE("property: interaction suppresses photon number and squeezing") {
  for (const double e : pump_grid(kKappa, 40, 0.999)) {
    if (e == 0.0) continue;
    CAPTURE(e);
    double n_prev = analytic::mean_photon_number({e, kKappa, 0.0});
    double s_prev = analytic::squeezing({e, kKappa, 0.0});
    for (int i = 1; i <= 40; ++i) {
      const ModelParams p{e, kKappa, double(i) / 40.0};
      const double n = analytic::mean_photon_number(p);
      const double s = analytic::squeezing(p);
      CHECK(n < n_prev);
      CHECK(s < s_prev);
      n_prev = n;
      s_prev = s;
    }
  }
}

TEST_CASE("property: squeezing ceiling without the atom") {
  for (const double e : pump_grid(kKappa, 200, 0.999999)) {
    CHECK(analytic::squeezing({e, kKappa, 0.0}) < 0.5);
  }
  CHECK(analytic::squeezing({0.499 * kKappa, kKappa, 0.0}) > 0.49);
}

TEST_CASE("property: uncertainty relation for gamma_c up to 2 kappa") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 5000; ++trial) {
    const double kappa = 0.05 + 5.0 * u(rng);
    const ModelParams p{0.5 * kappa * u(rng) * 0.999, kappa, 2.0 * kappa * u(rng)};
    const auto v = analytic::quadrature_variances(p);
    CHECK(v.var_plus > 0.0);
    CHECK(v.var_minus > 0.0);
    CHECK(std::sqrt(v.var_plus * v.var_minus) >= analytic::uncertainty_bound(p));
  }
}

TEST_CASE("plus quadrature sits below the vacuum level for gamma_c up to kappa") {
  for (const double gc : {0.0, 0.25, 0.5, 0.8}) {
    for (const double e : pump_grid(kKappa, 200, 0.999)) {
      if (e == 0.0) continue;
      const ModelParams p{e, kKappa, gc};
      CHECK(analytic::quadrature_variances(p).var_plus < analytic::vacuum_variance(p));
    }
  }
}

TEST_CASE("strong coupling lifts the plus quadrature above vacuum at weak pump") {
  // Records the edge of the squeezing claim: with gamma_c well above kappa
  // the atomic noise outweighs the parametric gain near epsilon = 0.
  const ModelParams p{0.031, kKappa, 2.0};
  CHECK(analytic::quadrature_variances(p).var_plus > analytic::vacuum_variance(p));
  CHECK(analytic::squeezing(p) < 0.0);
}

TEST_CASE("uncertainty relation fails for gamma_c well above 2 kappa") {
  const ModelParams p{0.256 * kKappa, kKappa, 3.0 * kKappa};
  const auto v = analytic::quadrature_variances(p);
  CHECK(std::sqrt(v.var_plus * v.var_minus) < analytic::uncertainty_bound(p));
  const ModelParams far{0.421 * kKappa, kKappa, 5.0 * kKappa};
  CHECK(analytic::quadrature_variances(far).var_minus < 0.0);
}
