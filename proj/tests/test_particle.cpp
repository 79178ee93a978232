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
#include <string>
#include <vector>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"
#include "cpforge/particle.hpp"
#include "approx.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cpforge;
using cpforge::constants::pi;

using oracle::depolarization_integral;

TEST_CASE("depolarization factors") {
  const auto s = depolarization_factors(5e-9, 5e-9);
  CHECK(s.x == 1.0 / 3.0);
  CHECK(s.y == 1.0 / 3.0);
  CHECK(s.z == 1.0 / 3.0);

  for (double rho : {0.1, 0.5, 0.999, 1.001, 2.0, 10.0}) {
    INFO("rho = " << rho);
    CHECK(depolarization_factors(1.0, rho).z ==
          approx(depolarization_integral(1.0, rho)).epsilon(1e-10));
  }

  const auto disk = depolarization_factors(1.0, 1e4);
  CHECK(disk.z > 0.999);
  CHECK(disk.x < 1e-3);
  const auto needle = depolarization_factors(1e4, 1.0);
  CHECK(needle.z < 1e-6);
  CHECK(needle.x == approx(0.5).epsilon(1e-5));
}

TEST_CASE("depolarization sum rule, continuity, monotonicity") {
  double prev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double rho = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
    const auto l = depolarization_factors(1.0, rho);
    CHECK(std::abs(l.x + l.y + l.z - 1.0) <= 1e-12);
    CHECK(l.x == l.y);
    CHECK(l.z > 0.0);
    CHECK(l.z < 1.0);
    CHECK(l.z > prev);
    prev = l.z;
  }
  for (double rho : {1.0 - 1e-6, 1.0 + 1e-6, 1.0 - 1e-4, 1.0 + 1e-4, 1.0 - 4e-7, 1.0 + 4e-7}) {
    CHECK(std::abs(depolarization_factors(1.0, rho).z - 1.0 / 3.0) <= 0.14 * std::abs(rho * rho - 1.0));
  }
  // Both sides of the series switch agree with the closed branches.
  for (double eps : {1e-6, 0.0999, 0.1001}) {
    for (double sign : {-1.0, 1.0}) {
      const double rho = std::sqrt(1.0 + sign * eps);
      CHECK(depolarization_factors(1.0, rho).z ==
            approx(depolarization_integral(1.0, rho)).epsilon(1e-10));
    }
  }
}

TEST_CASE("spheroid construction") {
  CHECK_THROWS_AS(Spheroid(0.0, 1.0, Orientation::AxisAlongZ), Error);
  CHECK_THROWS_AS(Spheroid(1.0, -1.0, Orientation::AxisAlongZ), Error);
  const auto p = Spheroid::with_aspect_ratio(0.1, 10e-9, Orientation::AxisAlongX);
  CHECK(p.semi_axis_b() / p.semi_axis_a() == approx(0.1).epsilon(1e-14));
  CHECK(equal_volume_radius(p) == approx(10e-9).epsilon(1e-14));
  CHECK(equal_volume_radius(Spheroid(100e-9, 10e-9, Orientation::AxisAlongZ)) ==
        approx(21.544346900318838e-9).epsilon(1e-12));
  CHECK(equal_volume_radius(Spheroid(1e-9, 10e-9, Orientation::AxisAlongZ)) ==
        approx(4.641588833612779e-9).epsilon(1e-12));
  CHECK(equal_volume_radius(Spheroid::sphere(7e-9)) == approx(7e-9));
  const auto big = Spheroid(100e-9, 10e-9, Orientation::AxisAlongZ);
  CHECK(big.volume() == approx(4.0 * pi / 3.0 * std::pow(equal_volume_radius(big), 3)));
}

TEST_CASE("polarizabilities") {
  const auto gold = DrudeMetal::gold();
  const double r = 10e-9;
  const double xi1 = 2.0 * pi * constants::boltzmann * 300.0 / constants::hbar;

  for (double xi : {xi1, 1e15, 3e16}) {
    const double eps = 1.0 + gold.plasma_frequency() * gold.plasma_frequency() /
                                 (xi * (xi + gold.damping()));
    const double cm = 4.0 * pi * r * r * r * (eps - 1.0) / (eps + 2.0);
    CHECK(polarizability_sphere(r, gold, xi) == approx(cm).epsilon(1e-13));
    const auto t = polarizability_spheroid(Spheroid::sphere(r), xi);
    CHECK(std::abs(t.x - polarizability_sphere(r, gold, xi)) <= 1e-14 * t.x);
    CHECK(t.x == t.y);
    CHECK(t.y == t.z);
  }
  CHECK(polarizability_sphere(r, gold, 0.0) == approx(4.0 * pi * r * r * r).epsilon(1e-14));
  // A vacuum-like particle: vanishing plasma frequency gives vanishing alpha.
  CHECK(polarizability_sphere(r, DrudeMetal(1e-30, 1.0), 1e14) < 1e-60);

  std::vector<std::string> warnings;
  polarizability_sphere(10e-9, gold, xi1, &warnings);
  CHECK(warnings.empty());
  polarizability_sphere(30e-9, gold, xi1, &warnings);
  CHECK(warnings.size() == 1);

  // Static limit and composition with the depolarization factors.
  for (double rho : {0.1, 10.0}) {
    const auto p = Spheroid::with_aspect_ratio(rho, r, Orientation::AxisAlongZ);
    const auto l = depolarization_factors(p.semi_axis_a(), p.semi_axis_b());
    const double v = 4.0 * pi / 3.0 * p.semi_axis_a() * p.semi_axis_b() * p.semi_axis_b();
    const auto s = polarizability_spheroid(p, 0.0);
    CHECK(s.z == approx(v / l.z).epsilon(1e-14));
    CHECK(s.x == approx(v / l.x).epsilon(1e-14));
    const double eps = 1.0 + gold.plasma_frequency() * gold.plasma_frequency() /
                                 (xi1 * (xi1 + gold.damping()));
    const auto a = polarizability_spheroid(p, xi1);
    CHECK(a.z == approx(v * (eps - 1.0) / (1.0 + (eps - 1.0) * l.z)).epsilon(1e-13));
    CHECK(a.x == approx(v * (eps - 1.0) / (1.0 + (eps - 1.0) * l.x)).epsilon(1e-13));
  }
}

TEST_CASE("orientation permutes the tensor") {
  for (double rho : {0.1, 0.7, 3.0}) {
    const auto z = polarizability_spheroid(Spheroid::with_aspect_ratio(rho, 10e-9, Orientation::AxisAlongZ), 2e15);
    const auto x = polarizability_spheroid(Spheroid::with_aspect_ratio(rho, 10e-9, Orientation::AxisAlongX), 2e15);
    CHECK(z.x == z.y);
    CHECK(x.y == x.z);
    CHECK(x.x == z.z);
    CHECK(x.y == z.x);
  }
}

TEST_CASE("polarizabilities are positive and decreasing") {
  for (double rho : {0.1, 1.0, 10.0}) {
    const auto p = Spheroid::with_aspect_ratio(rho, 10e-9, Orientation::AxisAlongX);
    PolarizabilityTensor prev = polarizability_spheroid(p, 0.0);
    for (double xi = 1e11; xi < 1e19; xi *= 3.0) {
      const auto a = polarizability_spheroid(p, xi);
      CHECK(a.x > 0.0);
      CHECK(a.y > 0.0);
      CHECK(a.x < prev.x);
      CHECK(a.y < prev.y);
      prev = a;
    }
  }
}
