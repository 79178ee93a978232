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


#include "cpforge/particle.hpp"

#include <cmath>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"

namespace cpforge {

namespace {

using constants::pi;

// Body-frame component V / (1/chi + L); chi = eps - 1.
double component(double volume, const DrudeMetal& m, double xi, double depol) {
  return volume / (m.inverse_susceptibility(xi) + depol);
}

}  // namespace

Spheroid::Spheroid(double semi_axis_a, double semi_axis_b, Orientation orientation,
                   DrudeMetal material)
    : a_(semi_axis_a), b_(semi_axis_b), orientation_(orientation), material_(material) {
  require(std::isfinite(semi_axis_a) && semi_axis_a > 0.0, "semi-axis a must be > 0");
  require(std::isfinite(semi_axis_b) && semi_axis_b > 0.0, "semi-axis b must be > 0");
}

Spheroid Spheroid::sphere(double radius, DrudeMetal material) {
  return Spheroid(radius, radius, Orientation::AxisAlongZ, material);
}

Spheroid Spheroid::with_aspect_ratio(double aspect_ratio, double equal_volume_radius,
                                     Orientation orientation, DrudeMetal material) {
  require(std::isfinite(aspect_ratio) && aspect_ratio > 0.0, "aspect ratio must be > 0");
  require(std::isfinite(equal_volume_radius) && equal_volume_radius > 0.0,
          "equal-volume radius must be > 0");
  if (aspect_ratio == 1.0) return Spheroid(equal_volume_radius, equal_volume_radius, orientation,
                                           material);
  const double a = equal_volume_radius * std::cbrt(1.0 / (aspect_ratio * aspect_ratio));
  return Spheroid(a, aspect_ratio * a, orientation, material);
}

double Spheroid::volume() const noexcept { return 4.0 * pi / 3.0 * a_ * b_ * b_; }

DepolarizationFactors depolarization_factors(double semi_axis_a, double semi_axis_b) {
  require(std::isfinite(semi_axis_a) && semi_axis_a > 0.0, "semi-axis a must be > 0");
  require(std::isfinite(semi_axis_b) && semi_axis_b > 0.0, "semi-axis b must be > 0");
  if (semi_axis_a == semi_axis_b) return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

  const double rho = semi_axis_b / semi_axis_a;
  const double r2 = rho * rho;
  const double eps = r2 - 1.0;  // -e^2 prolate, +e^2 oblate
  double lz;
  if (std::abs(eps) < 0.1) {
    // (1 + eps) sum_k (-eps)^k / (2k + 3); the closed forms cancel badly here.
    double sum = 0.0, pw = 1.0;
    for (int k = 0; k < 40 && std::abs(pw) > 1e-18; ++k, pw *= -eps) sum += pw / (2 * k + 3);
    lz = r2 * sum;
  } else if (rho < 1.0) {
    const double e2 = -eps;
    const double e = std::sqrt(e2);
    lz = r2 / e2 * (std::atanh(e) / e - 1.0);
  } else {
    const double e2 = eps;
    const double e = std::sqrt(e2);
    lz = r2 / e2 * (1.0 - std::atan(e) / e);
  }
  const double lt = 0.5 * (1.0 - lz);
  return {lt, lt, lz};
}

PolarizabilityTensor polarizability_spheroid(const Spheroid& particle, double xi) {
  require(std::isfinite(xi) && xi >= 0.0, "frequency must be finite and >= 0");
  const auto l = depolarization_factors(particle.semi_axis_a(), particle.semi_axis_b());
  const double v = particle.volume();
  const double para = component(v, particle.material(), xi, l.z);
  const double perp = particle.is_sphere() ? para : component(v, particle.material(), xi, l.x);
  if (particle.orientation() == Orientation::AxisAlongZ) return {perp, perp, para};
  return {para, perp, perp};
}

double polarizability_sphere(double radius, const DrudeMetal& material, double xi,
                             std::vector<std::string>* warnings) {
  require(std::isfinite(radius) && radius > 0.0, "radius must be > 0");
  require(std::isfinite(xi) && xi >= 0.0, "frequency must be finite and >= 0");
  if (warnings != nullptr && radius > kMinimalSkinDepth)
    warnings->push_back("radius exceeds the minimal skin depth (21 nm); the dipole "
                        "polarizability is outside its validity range");
  // 4 pi R^3 chi / (chi + 3) = (4 pi / 3) R^3 / (1/chi + 1/3)
  return component(4.0 * pi / 3.0 * radius * radius * radius, material, xi, 1.0 / 3.0);
}

double equal_volume_radius(const Spheroid& particle) {
  const double a = particle.semi_axis_a();
  const double b = particle.semi_axis_b();
  return std::cbrt(a * b * b);
}

}  // namespace cpforge
