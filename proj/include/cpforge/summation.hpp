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

// Casimir-Polder energy and force of a particle at distance d above an
// interface. At T > 0 the result is the Matsubara sum
//
//   H = sum'_n (kB T / 2 pi) f(xi_n),   F = sum'_n (kB T / 2 pi) ft(xi_n),
//
// with the n = 0 term halved; at T = 0 the sum becomes (hbar / 4 pi^2) Int dxi.
// F < 0 is attractive.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cpforge/kernel.hpp"
#include "cpforge/particle.hpp"
#include "cpforge/reflection.hpp"

namespace cpforge {

class MatsubaraGrid {
 public:
  explicit MatsubaraGrid(double temperature);

  double temperature() const noexcept { return temperature_; }
  double frequency(int n) const noexcept { return n * step_; }
  double weight(int n) const noexcept { return n == 0 ? 0.5 : 1.0; }

 private:
  double temperature_;
  double step_;
};

struct SummationOptions {
  double rel_tol = 1e-8;
  int max_terms = 1000000;
  /// Worker threads for kernel evaluation; 0 means hardware concurrency.
  int threads = 0;
  /// Shared memo for nonlocal polarization-tensor values; created on demand.
  std::shared_ptr<PolarizationCache> cache;
};

struct CPResult {
  double energy = 0.0;  // [J]
  double force = 0.0;   // [N]
  int terms_used = 0;
  double energy_tail_bound = 0.0;
  double force_tail_bound = 0.0;
  /// Accumulated quadrature error relative to the result (max of energy, force).
  double quadrature_error = 0.0;
  /// Terms where the graphene conductivity was used below 1/tau.
  int below_validity_terms = 0;
  std::vector<std::string> warnings;
};

/// Polarizability of the particle at imaginary frequency xi.
using PolarizabilityProvider = std::function<PolarizabilityTensor(double xi)>;

PolarizabilityProvider polarizability_of(const Spheroid& particle);

CPResult cp_evaluate(double temperature, double distance, const PolarizabilityProvider& particle,
                     const InterfaceModel& interface, const SummationOptions& options = {});
CPResult cp_evaluate(double temperature, double distance, const Spheroid& particle,
                     const InterfaceModel& interface, const SummationOptions& options = {});

CPResult cp_energy(double temperature, double distance, const Spheroid& particle,
                   const InterfaceModel& interface, const SummationOptions& options = {});
CPResult cp_force(double temperature, double distance, const Spheroid& particle,
                  const InterfaceModel& interface, const SummationOptions& options = {});

/// Zero-temperature energy and force by quadrature over xi. Any material
/// temperature (graphene) is the one carried by the interface model. The
/// nonlocal model exists only at Matsubara frequencies and is rejected.
CPResult cp_evaluate_T0(double distance, const PolarizabilityProvider& particle,
                        const InterfaceModel& interface, double rel_tol = 1e-9);
CPResult cp_evaluate_T0(double distance, const Spheroid& particle,
                        const InterfaceModel& interface, double rel_tol = 1e-9);

enum class Quantity { Force, Energy };

/// numerator / reference for the chosen quantity; ZeroReference if the
/// reference vanishes.
double normalize(const CPResult& numerator, const CPResult& reference,
                 Quantity quantity = Quantity::Force);

/// Smallest number of Matsubara terms always summed at distance d: five
/// e-folds of the exp(-xi_n / omega_c) envelope.
int minimum_terms(double temperature, double distance);

}  // namespace cpforge
