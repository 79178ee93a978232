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

#include <numbers>

// SI values (CODATA 2018).
namespace cpforge::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double boltzmann = 1.380649e-23;              // J/K
inline constexpr double elementary_charge = 1.602176634e-19;   // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double vacuum_permeability = 1.25663706212e-6;  // N/A^2
inline constexpr double electron_volt = elementary_charge;     // J

inline constexpr double fine_structure =
    elementary_charge * elementary_charge /
    (4.0 * pi * vacuum_permittivity * hbar * speed_of_light);

/// Universal optical conductivity of graphene, e^2 / (4 hbar).
inline constexpr double graphene_universal_conductivity =
    elementary_charge * elementary_charge / (4.0 * hbar);

/// Fermi velocity used by the nonlocal graphene response.
inline constexpr double graphene_fermi_velocity = 8.73723e5;  // m/s

}  // namespace cpforge::constants
