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


#include "cpforge/kernel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"

namespace cpforge {

namespace {

using constants::speed_of_light;

constexpr double kTailWidth = 45.0;
constexpr double kAcceptedError = 1e-9;

void require_geometry(double xi, double distance) {
  require(std::isfinite(xi) && xi >= 0.0, "frequency must be finite and >= 0");
  require(std::isfinite(distance) && distance > 0.0, "distance must be > 0");
}

}  // namespace

double characteristic_frequency(double distance) { return speed_of_light / (2.0 * distance); }

Quadrature<std::array<double, 2>> kernel_quadrature(const std::function<double(double)>& bracket,
                                                    double xi, double distance,
                                                    const QuadratureOptions& options) {
  require_geometry(xi, distance);
  const double two_d = 2.0 * distance;
  const double t0 = two_d * xi / speed_of_light;
  // s = t - t0; exp(-t0) is applied after integration so that large t0 does
  // not underflow the integrand.
  const double s_max = std::max(t0, 1.0) + kTailWidth - t0;
  auto integrand = [&](double s) -> std::array<double, 2> {
    const double t = t0 + s;
    const double kappa = std::sqrt(s * (s + 2.0 * t0)) / two_d;
    const double w = std::exp(-s) * bracket(kappa);
    return {w, t * w};
  };

  std::vector<double> breaks;
  for (double b : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 30.0})
    if (b < s_max) breaks.push_back(b);
  breaks.push_back(s_max);

  auto q = integrate(integrand, std::span<const double>(breaks), options);
  const double scale = std::exp(-t0);
  const double e_scale = scale / (2.0 * two_d);
  const double f_scale = scale / (two_d * two_d);
  q.value = {q.value[0] * e_scale, q.value[1] * f_scale};
  q.error = {q.error[0] * e_scale, q.error[1] * f_scale};
  return q;
}

KernelValue evaluate_kernels(const KernelRequest& request) {
  require_geometry(request.xi, request.distance);
  require(request.interface != nullptr, "kernel request without interface");

  const ReflectionEvaluator reflection(*request.interface, request.xi, request.matsubara_index,
                                       request.cache);
  // The nonlocal model fixes xi from the Matsubara index.
  const double xi = reflection.frequency();
  const double k0 = xi / speed_of_light;
  const double k0sq = k0 * k0;
  const double abar = request.alpha.transverse_mean();
  const double az = request.alpha.z;

  auto bracket = [&](double kappa) {
    const auto r = reflection(kappa);
    const double k2 = kappa * kappa;
    return k0sq * r.rs * abar - r.rp * (abar * (k0sq + k2) + k2 * az);
  };

  const bool nonlocal = std::holds_alternative<NonlocalGraphene>(*request.interface);
  QuadratureOptions opt;
  // Polarization-tensor values carry ~1e-11 noise; asking for more only
  // burns panels.
  opt.rel_tol = nonlocal ? 1e-10 : 1e-12;
  opt.max_panels = nonlocal ? 600 : 2000;
  const auto q = kernel_quadrature(bracket, xi, request.distance, opt);

  const double fe = q.value[0];
  const double ff = q.value[1];
  if (q.error[0] > kAcceptedError * std::abs(fe) || q.error[1] > kAcceptedError * std::abs(ff))
    fail(ErrorCode::QuadratureFailure,
         "kernel integral did not converge (xi = " + std::to_string(xi) +
             ", d = " + std::to_string(request.distance) + ")");
  return {fe, ff, q.error[0], q.error[1], q.evaluations};
}

double energy_kernel(const KernelRequest& request) { return evaluate_kernels(request).energy; }

double force_kernel(const KernelRequest& request) { return evaluate_kernels(request).force; }

double ideal_metal_energy_kernel(double xi, double distance, const PolarizabilityTensor& alpha) {
  require_geometry(xi, distance);
  const double u = xi / characteristic_frequency(distance);
  const double abar = alpha.transverse_mean();
  const double two_d = 2.0 * distance;
  return -std::exp(-u) / (two_d * two_d * two_d) *
         (abar * (u * u + u + 1.0) + alpha.z * (u + 1.0));
}

double ideal_metal_force_kernel(double xi, double distance, const PolarizabilityTensor& alpha) {
  require_geometry(xi, distance);
  const double u = xi / characteristic_frequency(distance);
  const double abar = alpha.transverse_mean();
  const double two_d = 2.0 * distance;
  const double d4 = two_d * two_d * two_d * two_d;
  return -2.0 * std::exp(-u) / d4 *
         (abar * (((u + 2.0) * u + 3.0) * u + 3.0) + alpha.z * ((u + 3.0) * u + 3.0));
}

}  // namespace cpforge
