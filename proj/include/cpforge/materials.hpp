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

// Dielectric and conductivity response on the imaginary frequency axis.
// Every frequency argument `xi` is an angular frequency in rad/s with xi >= 0.

#include <variant>

namespace cpforge {

/// Drude metal, eps(i xi) = 1 + wp^2 / (xi (xi + gamma)).
class DrudeMetal {
 public:
  DrudeMetal(double plasma_frequency, double damping);

  /// wp = 1.4e16 rad/s, gamma = 3e13 rad/s.
  static DrudeMetal gold();

  double plasma_frequency() const noexcept { return plasma_frequency_; }
  double damping() const noexcept { return damping_; }

  /// eps(i xi) - 1, finite for xi > 0.
  double susceptibility(double xi) const;
  /// 1 / (eps(i xi) - 1); zero at xi = 0.
  double inverse_susceptibility(double xi) const;

  friend bool operator==(const DrudeMetal&, const DrudeMetal&) = default;

 private:
  double plasma_frequency_;
  double damping_;
};

/// A relative permittivity that may be the infinite static Drude limit. The
/// infinite state is only meaningful to reflection-coefficient limits.
class Permittivity {
 public:
  static Permittivity finite(double value);
  static Permittivity infinite() noexcept { return Permittivity(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws InvalidArgument for the infinite sentinel.
  double value() const;

 private:
  Permittivity() = default;
  double value_ = 0.0;
  bool infinite_ = true;
};

Permittivity permittivity_drude(const DrudeMetal& metal, double xi);

struct ConstantPermittivity {
  double value;
  friend bool operator==(const ConstantPermittivity&, const ConstantPermittivity&) = default;
};

/// Medium below a graphene sheet; monostate means a suspended sheet.
using Substrate = std::variant<std::monostate, DrudeMetal, ConstantPermittivity>;

Permittivity substrate_permittivity(const Substrate& substrate, double xi);

class GrapheneSheet {
 public:
  /// `fermi_level` in joules.
  GrapheneSheet(double fermi_level, double relaxation_time, double temperature,
                Substrate substrate = {});

  static GrapheneSheet from_electron_volts(double fermi_level_ev, double relaxation_time,
                                           double temperature, Substrate substrate = {});

  double fermi_level() const noexcept { return fermi_level_; }
  double relaxation_time() const noexcept { return relaxation_time_; }
  double temperature() const noexcept { return temperature_; }
  const Substrate& substrate() const noexcept { return substrate_; }
  bool suspended() const noexcept {
    return std::holds_alternative<std::monostate>(substrate_);
  }

 private:
  double fermi_level_;
  double relaxation_time_;
  double temperature_;
  Substrate substrate_;
};

/// Fermi-Dirac occupation of a state at angular frequency `omega`
/// (energy hbar*omega) for the given Fermi level [J] and temperature [K].
double fermi_occupation(double omega, double fermi_level, double temperature);

/// Intraband (Drude-like) conductivity [S] with i/(w + i/tau) -> 1/(xi + 1/tau).
double sigma_drude(const GrapheneSheet& sheet, double xi);

/// Interband conductivity [S],
///   (e^2 xi / pi hbar) Int_0^inf de [f0(-e) - f0(e)] / (xi^2 + 4 e^2),
/// integrated in the variable e = (xi/2) tan(t). Throws QuadratureFailure if
/// the relative error estimate stays above 1e-8.
double sigma_interband(const GrapheneSheet& sheet, double xi);

double sigma_total(const GrapheneSheet& sheet, double xi);

/// The conductivity model is strictly valid only for xi >= 1/tau. Evaluation
/// below that is allowed; this reports it.
bool conductivity_below_validity(const GrapheneSheet& sheet, double xi) noexcept;

}  // namespace cpforge
