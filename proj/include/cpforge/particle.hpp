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

// Dipole polarizabilities of Drude spheres and spheroids. Polarizabilities
// are volumes [m^3] in the convention p = eps0 alpha E.

#include <string>
#include <vector>

#include "cpforge/materials.hpp"

namespace cpforge {

enum class Orientation { AxisAlongZ, AxisAlongX };

/// Spheroid with semi-axis `semi_axis_a` along the rotational axis and
/// `semi_axis_b` transverse to it. Oblate for a < b, prolate for a > b.
class Spheroid {
 public:
  Spheroid(double semi_axis_a, double semi_axis_b, Orientation orientation,
           DrudeMetal material = DrudeMetal::gold());

  static Spheroid sphere(double radius, DrudeMetal material = DrudeMetal::gold());
  /// Spheroid with R_b / R_a = `aspect_ratio` and the volume of a sphere of
  /// radius `equal_volume_radius`.
  static Spheroid with_aspect_ratio(double aspect_ratio, double equal_volume_radius,
                                    Orientation orientation,
                                    DrudeMetal material = DrudeMetal::gold());

  double semi_axis_a() const noexcept { return a_; }
  double semi_axis_b() const noexcept { return b_; }
  Orientation orientation() const noexcept { return orientation_; }
  const DrudeMetal& material() const noexcept { return material_; }
  bool is_sphere() const noexcept { return a_ == b_; }
  double volume() const noexcept;

 private:
  double a_;
  double b_;
  Orientation orientation_;
  DrudeMetal material_;
};

struct PolarizabilityTensor {
  double x;
  double y;
  double z;

  double transverse_mean() const noexcept { return 0.5 * (x + y); }
  static PolarizabilityTensor isotropic(double alpha) noexcept { return {alpha, alpha, alpha}; }
};

/// Body frame, z along the rotational axis.
struct DepolarizationFactors {
  double x;
  double y;
  double z;
};

DepolarizationFactors depolarization_factors(double semi_axis_a, double semi_axis_b);

/// Lab-frame tensor at imaginary frequency `xi`; xi = 0 takes the static
/// Drude limit V / L_i.
PolarizabilityTensor polarizability_spheroid(const Spheroid& particle, double xi);

/// Clausius-Mossotti polarizability 4 pi R^3 (eps - 1)/(eps + 2). When
/// `warnings` is given, a note is appended if the radius exceeds the
/// minimal skin depth of the material model.
double polarizability_sphere(double radius, const DrudeMetal& material, double xi,
                             std::vector<std::string>* warnings = nullptr);

double equal_volume_radius(const Spheroid& particle);

/// Smallest skin depth of gold in the Drude model, used for the validity note.
inline constexpr double kMinimalSkinDepth = 21e-9;

}  // namespace cpforge
