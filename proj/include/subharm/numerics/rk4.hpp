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

#include <cstddef>
#include <functional>
#include <span>

#include "subharm/numerics/dense.hpp"

namespace subharm::numerics {

/// dydt = f(t, y); must overwrite all of dydt.
using Derivative = std::function<void(double t, std::span<const cplx> y, std::span<cplx> dydt)>;

/// Called at t = 0, every `sample_every`, and at t_end, with the derivative
/// at that state. Return false to stop the integration there.
using Observer = std::function<bool(double t, std::span<const cplx> y, std::span<const cplx> dydt)>;

struct Rk4Options {
  double dt = 1e-3;
  double t_end = 1.0;
  /// Must be an integer multiple of dt; zero disables intermediate samples.
  double sample_every = 0.0;
};

struct Rk4Result {
  ComplexVector state;
  double t = 0.0;
  std::size_t steps = 0;
  bool stopped_early = false;
};

/// Classic fixed-step fourth-order Runge-Kutta. The final step is shortened
/// when t_end is not a multiple of dt. Throws NonFiniteState when the state
/// stops being finite (checked at every sample and at the end).
Rk4Result rk4_integrate(const Derivative& f, ComplexVector y0, const Rk4Options& opts,
                        const Observer& observe = {});

/// Uniform samples of a scalar trajectory, convenient for tests and small ODEs.
struct SampledTrajectory {
  std::vector<double> times;
  std::vector<ComplexVector> states;
};

SampledTrajectory rk4_sample(const Derivative& f, ComplexVector y0, const Rk4Options& opts);

}  // namespace subharm::numerics
