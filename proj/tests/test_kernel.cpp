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


#include <cmath>
#include <vector>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"
#include "cpforge/kernel.hpp"
#include "approx.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cpforge;
using namespace cpforge::constants;

namespace {

KernelValue generic(const InterfaceModel& m, double xi, double d, PolarizabilityTensor a,
                    std::optional<int> n = std::nullopt) {
  KernelRequest r;
  r.xi = xi;
  r.distance = d;
  r.interface = &m;
  r.alpha = a;
  r.matsubara_index = n;
  return evaluate_kernels(r);
}

std::vector<double> u_grid() {
  std::vector<double> u{0.0};
  for (int i = 0; i < 49; ++i) u.push_back(1e-3 * std::pow(3e4, i / 48.0));
  return u;
}

}  // namespace

TEST_CASE("ideal-metal closed forms at xi = 0") {
  const double d = 100e-9, a = 1e-24;
  const auto iso = PolarizabilityTensor::isotropic(a);
  CHECK(ideal_metal_energy_kernel(0.0, d, iso) == approx(-2.0 * a / std::pow(2 * d, 3)));
  CHECK(ideal_metal_force_kernel(0.0, d, iso) == approx(-12.0 * a / std::pow(2 * d, 4)));
  const double u = 2.5, xi = u * characteristic_frequency(d);
  CHECK(ideal_metal_energy_kernel(xi, d, iso) ==
        approx(-a * std::exp(-u) / std::pow(2 * d, 3) * (u * u + 2 * u + 2)).epsilon(1e-14));
  CHECK(ideal_metal_force_kernel(xi, d, iso) ==
        approx(-2 * a * std::exp(-u) / std::pow(2 * d, 4) * (u * u * u + 3 * u * u + 6 * u + 6))
            .epsilon(1e-14));
}

TEST_CASE("generic quadrature reproduces the ideal-metal closed forms") {
  const InterfaceModel ideal = IdealMetal{};
  for (double d : {20e-9, 1e-6, 50e-6}) {
    const double wc = characteristic_frequency(d);
    for (const auto& a : {PolarizabilityTensor::isotropic(3e-24), PolarizabilityTensor{1e-24, 2e-24, 7e-24},
                          PolarizabilityTensor{5e-24, 5e-24, 1e-25}}) {
      for (double u : u_grid()) {
        const auto k = generic(ideal, u * wc, d, a);
        INFO("d = " << d << ", u = " << u);
        CHECK(k.energy == approx(ideal_metal_energy_kernel(u * wc, d, a)).epsilon(1e-10));
        CHECK(k.force == approx(ideal_metal_force_kernel(u * wc, d, a)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("kernel quadrature on textbook integrals") {
  const double d = 70e-9;
  const auto q = kernel_quadrature([](double) { return 1.0; }, 0.0, d);
  CHECK(q.value[1] == approx(1.0 / std::pow(2 * d, 2)).epsilon(1e-13));
  CHECK(q.value[0] == approx(1.0 / (4 * d)).epsilon(1e-13));
}

TEST_CASE("truncation of the t range is immaterial") {
  const double d = 100e-9, xi = 3e14;
  const auto a = PolarizabilityTensor{1e-24, 2e-24, 3e-24};
  const auto sheet = GrapheneSheet(0.0, 1e-12, 300.0);
  const double k0 = xi / speed_of_light;
  auto bracket = [&](double kappa) {
    const auto r = reflect_graphene_local(sheet, xi, kappa);
    return k0 * k0 * r.rs * a.transverse_mean() -
           r.rp * (a.transverse_mean() * (k0 * k0 + kappa * kappa) + kappa * kappa * a.z);
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-13;
  const auto q = kernel_quadrature(bracket, xi, d, opt);
  // Same integrand over twice the range.
  const double two_d = 2 * d, t0 = two_d * xi / speed_of_light;
  auto wide = [&](double s) -> std::array<double, 2> {
    const double kappa = std::sqrt(s * (s + 2 * t0)) / two_d;
    const double w = std::exp(-s) * bracket(kappa);
    return {w, (t0 + s) * w};
  };
  const std::array<double, 6> breaks{0.0, 1.0, 4.0, 16.0, 45.0, 2 * (std::max(t0, 1.0) + 45.0 - t0)};
  const auto r = integrate(wide, std::span<const double>(breaks), opt);
  const double e = std::exp(-t0);
  CHECK(std::abs(q.value[0] - r.value[0] * e / (2 * two_d)) <= 1e-14 * std::abs(q.value[0]) * 10);
  CHECK(std::abs(q.value[1] - r.value[1] * e / (two_d * two_d)) <= 1e-14 * std::abs(q.value[1]) * 10);
}

TEST_CASE("graphene kernel against brute-force kappa trapezoid") {
  const double t = 300.0, d = 100e-9;
  const double xi = 2 * pi * boltzmann * t / hbar;
  const auto sheet = GrapheneSheet(0.0, 1e-12, t);
  const InterfaceModel g = LocalGraphene{sheet};
  const auto a = PolarizabilityTensor{2e-24, 2e-24, 9e-24};
  const auto [energy, force] = oracle::kappa_trapezoid(sigma_total(sheet, xi), xi, d, a, 1000000);
  const auto k = generic(g, xi, d, a);
  CHECK(k.energy == approx(energy).epsilon(1e-6));
  CHECK(k.force == approx(force).epsilon(1e-6));
}

TEST_CASE("kernel signs, ideal-metal dominance and sphere equivalence") {
  const double t = 300.0;
  const InterfaceModel models[] = {DrudeHalfSpace{DrudeMetal::gold()},
                                   LocalGraphene{GrapheneSheet(0.0, 1e-12, t)},
                                   LocalGraphene{GrapheneSheet::from_electron_volts(1.0, 1e-12, t)},
                                   NonlocalGraphene{t}};
  const auto step = 2 * pi * boltzmann * t / hbar;
  for (double d : {30e-9, 300e-9, 3e-6}) {
    for (int n : {0, 1, 5, 40}) {
      for (double rho : {0.1, 1.0, 10.0}) {
        const auto p = Spheroid::with_aspect_ratio(rho, 10e-9, Orientation::AxisAlongX);
        const auto a = polarizability_spheroid(p, n * step);
        const double fe = ideal_metal_energy_kernel(n * step, d, a);
        const double ff = ideal_metal_force_kernel(n * step, d, a);
        for (const auto& m : models) {
          const auto k = generic(m, n * step, d, a, n);
          CHECK(k.energy < 0.0);
          CHECK(k.force < 0.0);
          CHECK(std::abs(k.energy) <= std::abs(fe) * (1 + 1e-12));
          CHECK(std::abs(k.force) <= std::abs(ff) * (1 + 1e-12));
        }
      }
    }
  }
  // A spheroid with equal semi-axes is the sphere.
  const InterfaceModel gold = DrudeHalfSpace{DrudeMetal::gold()};
  for (double xi : {0.0, 1e14, 1e16}) {
    const auto as = polarizability_spheroid(Spheroid(10e-9, 10e-9, Orientation::AxisAlongX), xi);
    const auto iso = PolarizabilityTensor::isotropic(polarizability_sphere(10e-9, DrudeMetal::gold(), xi));
    const auto a = generic(gold, xi, 100e-9, as);
    const auto b = generic(gold, xi, 100e-9, iso);
    CHECK(std::abs(a.force - b.force) <= 1e-14 * std::abs(b.force));
    CHECK(std::abs(a.energy - b.energy) <= 1e-14 * std::abs(b.energy));
  }
}

TEST_CASE("kernel request validation") {
  const InterfaceModel nl = NonlocalGraphene{300.0};
  try {
    generic(nl, 1e14, 1e-7, PolarizabilityTensor::isotropic(1e-24));
    FAIL("expected MissingIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingIndex);
  }
  const InterfaceModel ideal = IdealMetal{};
  CHECK_THROWS_AS(generic(ideal, 1e14, 0.0, PolarizabilityTensor::isotropic(1e-24)), Error);
  CHECK_THROWS_AS(generic(ideal, -1.0, 1e-7, PolarizabilityTensor::isotropic(1e-24)), Error);
  KernelRequest r;
  r.distance = 1e-7;
  CHECK_THROWS_AS(evaluate_kernels(r), Error);
}
