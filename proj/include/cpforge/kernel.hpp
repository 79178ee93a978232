// Copyright 2026 The cpforge Authors.
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

// Per-frequency kernels of the Casimir-Polder energy and force,
//
//   f(xi)  = Int dk k exp(-2 d g0) / (2 g0) B(xi, k)
//   ft(xi) = Int dk k exp(-2 d g0) B(xi, k)
//   B      = (xi^2/c^2) rs abar - rp (abar g0^2 + k^2 az),  abar = (ax + ay)/2,
//
// with g0 = sqrt(xi^2/c^2 + k^2). Both are integrated in t = 2 d g0, which
// makes the exponential weight explicit: f = (1/4d) Int e^-t B dt and
// ft = (1/4d^2) Int t e^-t B dt over t >= 2 d xi / c.

#include <array>
#include <functional>
#include <optional>

#include "cpforge/particle.hpp"
#include "cpforge/quadrature.hpp"
#include "cpforge/reflection.hpp"

namespace cpforge {

struct KernelRequest {
  double xi = 0.0;
  double distance = 0.0;
  const InterfaceModel* interface = nullptr;
  PolarizabilityTensor alpha{};
  std::optional<int> matsubara_index;
  PolarizationCache* cache = nullptr;
};

struct KernelValue {
  double energy;        // f
  double force;         // ft [1/m]
  double energy_error;  // absolute quadrature error estimates
  double force_error;
  int evaluations;
};

/// Both kernels from one set of quadrature panels. Throws QuadratureFailure
/// when either relative error estimate exceeds 1e-9.
KernelValue evaluate_kernels(const KernelRequest& request);
double energy_kernel(const KernelRequest& request);
double force_kernel(const KernelRequest& request);

/// Integrates a bracket B(kappa) against the energy and force weights for
/// distance `d` at frequency `xi`. Returns {f, ft} with error estimates.
/// The tail beyond t = max(2 d xi / c, 1) + 45 is dropped.
Quadrature<std::array<double, 2>> kernel_quadrature(const std::function<double(double)>& bracket,
                                                    double xi, double distance,
                                                    const QuadratureOptions& options = {});

/// Closed forms for an ideal metal (rs = -1, rp = 1) and diagonal alpha.
double ideal_metal_energy_kernel(double xi, double distance, const PolarizabilityTensor& alpha);
double ideal_metal_force_kernel(double xi, double distance, const PolarizabilityTensor& alpha);

/// Characteristic frequency c / 2d.
double characteristic_frequency(double distance);

}  // namespace cpforge
