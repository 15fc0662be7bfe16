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

#include "subharm/numerics/rk4.hpp"

#include <cmath>
#include <string>

#include "subharm/numerics/kernels.hpp"

namespace subharm::numerics {

namespace {

double* as_doubles(ComplexVector& v) { return reinterpret_cast<double*>(v.data()); }

void require_finite(const ComplexVector& y, double t) {
  const double m = kernels::active_kernels().max_norm2(y.size(), y.data());
  if (!std::isfinite(m)) {
    throw NumericsError(NumericsErrc::NonFiniteState,
                        "state became non-finite at t=" + std::to_string(t) +
                            "; reduce dt below the fastest rate");
  }
}

}  // namespace

Rk4Result rk4_integrate(const Derivative& f, ComplexVector y0, const Rk4Options& opts,
                        const Observer& observe) {
  if (!(opts.dt > 0.0)) {
    throw NumericsError(NumericsErrc::InvalidArgument, "rk4: dt must be positive");
  }
  if (!(opts.t_end >= 0.0)) {
    throw NumericsError(NumericsErrc::InvalidArgument, "rk4: t_end must be non-negative");
  }
  std::size_t stride = 0;
  if (opts.sample_every > 0.0) {
    const double ratio = opts.sample_every / opts.dt;
    stride = static_cast<std::size_t>(std::llround(ratio));
    if (stride == 0 || std::abs(ratio - static_cast<double>(stride)) > 1e-9 * ratio) {
      throw NumericsError(NumericsErrc::InvalidArgument,
                          "rk4: sample interval must be an integer multiple of dt");
    }
  }

  const auto& k = kernels::active_kernels();
  const std::size_t n = y0.size();
  const std::size_t nd = 2 * n;
  // Full steps of length dt, then at most one short step to land on t_end.
  auto full_steps = static_cast<std::size_t>(std::floor(opts.t_end / opts.dt * (1.0 + 1e-12)));
  const double remainder = opts.t_end - static_cast<double>(full_steps) * opts.dt;
  const bool short_step = remainder > 1e-12 * opts.dt;

  Rk4Result res;
  res.state = std::move(y0);
  ComplexVector& y = res.state;
  ComplexVector k1(n), k2(n), k3(n), k4(n), tmp(n);

  const std::size_t total = full_steps + (short_step ? 1 : 0);
  for (std::size_t step = 0; step < total; ++step) {
    const double t = static_cast<double>(step) * opts.dt;
    const double h = step < full_steps ? opts.dt : remainder;
    f(t, y, k1);
    if (stride != 0 && step % stride == 0) {
      require_finite(y, t);
      if (observe && !observe(t, y, k1)) {
        res.t = t;
        res.steps = step;
        res.stopped_early = true;
        return res;
      }
    }
    k.axpy_into(nd, as_doubles(y), 0.5 * h, as_doubles(k1), as_doubles(tmp));
    f(t + 0.5 * h, tmp, k2);
    k.axpy_into(nd, as_doubles(y), 0.5 * h, as_doubles(k2), as_doubles(tmp));
    f(t + 0.5 * h, tmp, k3);
    k.axpy_into(nd, as_doubles(y), h, as_doubles(k3), as_doubles(tmp));
    f(t + h, tmp, k4);
    k.axpy(nd, h / 6.0, as_doubles(k1), as_doubles(y));
    k.axpy(nd, h / 3.0, as_doubles(k2), as_doubles(y));
    k.axpy(nd, h / 3.0, as_doubles(k3), as_doubles(y));
    k.axpy(nd, h / 6.0, as_doubles(k4), as_doubles(y));
  }
  res.t = opts.t_end;
  res.steps = total;
  require_finite(y, res.t);
  if (observe) {
    f(res.t, y, k1);
    res.stopped_early = !observe(res.t, y, k1);
  }
  return res;
}

SampledTrajectory rk4_sample(const Derivative& f, ComplexVector y0, const Rk4Options& opts) {
  SampledTrajectory out;
  rk4_integrate(f, std::move(y0), opts,
                [&](double t, std::span<const cplx> y, std::span<const cplx>) {
                  if (!out.times.empty() && t <= out.times.back()) return true;
                  out.times.push_back(t);
                  out.states.emplace_back(y.begin(), y.end());
                  return true;
                });
  return out;
}

}  // namespace subharm::numerics
