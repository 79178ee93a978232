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

// Declarative description of a computation: a scenario (temperature,
// distance, particle, interface, normalization) plus either a sweep over one
// scenario variable or a conductivity table. Parsed from INI-style text:
//
//   [run]       kind = sweep | conductivity, name
//   [sweep]     variable = distance | aspect_ratio | fermi_level,
//               min, max, count, spacing = linear | log
//   [scenario]  temperature, distance, reference = ideal | gold | none
//   [particle]  shape = sphere | spheroid, radius (equal-volume), aspect_ratio,
//               semi_axis_a, semi_axis_b, orientation = z | x,
//               plasma_frequency, damping
//   [interface] model = ideal | drude | graphene | graphene-nonlocal,
//               plasma_frequency, damping, fermi_level (eV), relaxation_time,
//               temperature, substrate = none | gold | <permittivity>,
//               fermi_velocity
//   [numerics]  tolerance, max_terms, threads
//   [conductivity] fermi_level (eV), relaxation_time, temperature, n_max
//
// Lengths in metres, temperatures in kelvin, frequencies in rad/s.

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "cpforge/materials.hpp"
#include "cpforge/particle.hpp"
#include "cpforge/reflection.hpp"
#include "cpforge/summation.hpp"

namespace cpforge {

enum class SweepVariable { Distance, AspectRatio, FermiLevel };
enum class Spacing { Linear, Log };
enum class Reference { IdealMetal, GoldHalfSpace, None };
enum class InterfaceKind { Ideal, Drude, Graphene, GrapheneNonlocal };

struct ParticleSpec {
  bool spheroid = false;
  double radius = 10e-9;  // equal-volume radius
  double aspect_ratio = 1.0;  // R_b / R_a
  /// Explicit semi-axes override radius and aspect ratio when both are set.
  std::optional<double> semi_axis_a;
  std::optional<double> semi_axis_b;
  Orientation orientation = Orientation::AxisAlongZ;
  DrudeMetal material = DrudeMetal::gold();
};

struct InterfaceSpec {
  InterfaceKind kind = InterfaceKind::Ideal;
  DrudeMetal metal = DrudeMetal::gold();
  double fermi_level_ev = 0.0;
  double relaxation_time = 1e-12;
  /// Material temperature; defaults to the scenario temperature.
  std::optional<double> temperature;
  Substrate substrate;
  double fermi_velocity = constants::graphene_fermi_velocity;
};

struct Scenario {
  double temperature = 300.0;
  double distance = 100e-9;
  ParticleSpec particle;
  InterfaceSpec interface;
  Reference reference = Reference::IdealMetal;
};

struct NumericsSpec {
  double tolerance = 1e-8;
  int max_terms = 1000000;
  int threads = 0;
};

struct SweepSpec {
  std::string name = "sweep";
  SweepVariable variable = SweepVariable::Distance;
  double min = 100e-9;
  double max = 10e-6;
  int count = 20;
  Spacing spacing = Spacing::Log;
  Scenario scenario;
  NumericsSpec numerics;
};

struct ConductivitySpec {
  std::string name = "conductivity";
  double fermi_level_ev = 0.5;
  double relaxation_time = 1e-12;
  double temperature = 300.0;
  int n_max = 30;
};

/// One computation read from a config: exactly one of the two is set.
struct RunSpec {
  std::optional<SweepSpec> sweep;
  std::optional<ConductivitySpec> conductivity;
};

/// Throws Error(Parse) with the offending key or line, Error(Io) if the file
/// cannot be read, Error(InvalidArgument) for out-of-range values.
RunSpec parse_config(std::istream& in);
RunSpec parse_config_text(std::string_view text);
RunSpec load_config(const std::string& path);

void validate(const SweepSpec& spec);
std::vector<double> sweep_values(const SweepSpec& spec);
/// The scenario with the sweep variable set to `value`.
Scenario scenario_at(const SweepSpec& spec, double value);

Spheroid build_particle(const ParticleSpec& spec);
/// Graphene models take the interface temperature if given, else `temperature`.
InterfaceModel build_interface(const InterfaceSpec& spec, double temperature);
std::optional<InterfaceModel> reference_interface(Reference reference);

/// Compact specs for single-point evaluations:
///   interface: ideal | gold | drude:wp=..,gamma=.. | graphene[:ef=..,tau=..,T=..,substrate=..]
///              | graphene-nonlocal[:T=..,vf=..]
///   particle:  sphere[:r=..] | spheroid:rho=..[,r=..][,axis=z|x] | spheroid:a=..,b=..[,axis=..]
InterfaceSpec parse_interface_spec(std::string_view text);
ParticleSpec parse_particle_spec(std::string_view text);
Reference parse_reference(std::string_view text);

std::string_view to_string(SweepVariable variable) noexcept;

}  // namespace cpforge
