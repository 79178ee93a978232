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

#include "cpforge/materials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"
#include "cpforge/quadrature.hpp"

namespace cpforge {

namespace {

using namespace constants;

void require_frequency(double xi) {
  require(std::isfinite(xi) && xi >= 0.0, "frequency must be finite and >= 0");
}

// ln(2 cosh y) without overflow.
double log_two_cosh(double y) {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a));
}

// f0(-e) - f0(e) = sinh(a) / (cosh(a) + cosh(b)), a = hbar e / kT,
// b = E_F / kT, scaled by exp(-max(a, b)) so nothing overflows.
double pauli_factor(double a, double b) {
  const double m = std::max(a, b);
  const double num = std::exp(a - m) - std::exp(-a - m);
  const double den = std::exp(a - m) + std::exp(-a - m) + std::exp(b - m) + std::exp(-b - m);
  return num / den;
}

}  // namespace

DrudeMetal::DrudeMetal(double plasma_frequency, double damping)
    : plasma_frequency_(plasma_frequency), damping_(damping) {
  require(std::isfinite(plasma_frequency) && plasma_frequency > 0.0,
          "plasma frequency must be > 0");
  require(std::isfinite(damping) && damping > 0.0, "damping must be > 0");
}

DrudeMetal DrudeMetal::gold() { return DrudeMetal(1.4e16, 3e13); }

double DrudeMetal::susceptibility(double xi) const {
  require_frequency(xi);
  require(xi > 0.0, "Drude susceptibility diverges at xi = 0");
  return plasma_frequency_ * plasma_frequency_ / (xi * (xi + damping_));
}

double DrudeMetal::inverse_susceptibility(double xi) const {
  require_frequency(xi);
  return xi * (xi + damping_) / (plasma_frequency_ * plasma_frequency_);
}

Permittivity Permittivity::finite(double value) {
  require(std::isfinite(value), "finite permittivity expected");
  Permittivity p;
  p.value_ = value;
  p.infinite_ = false;
  return p;
}

double Permittivity::value() const {
  if (infinite_) fail(ErrorCode::InvalidArgument, "permittivity is the infinite static limit");
  return value_;
}

Permittivity permittivity_drude(const DrudeMetal& metal, double xi) {
  require_frequency(xi);
  if (xi == 0.0) return Permittivity::infinite();
  return Permittivity::finite(1.0 + metal.susceptibility(xi));
}

Permittivity substrate_permittivity(const Substrate& substrate, double xi) {
  if (const auto* metal = std::get_if<DrudeMetal>(&substrate))
    return permittivity_drude(*metal, xi);
  if (const auto* c = std::get_if<ConstantPermittivity>(&substrate))
    return Permittivity::finite(c->value);
  return Permittivity::finite(1.0);
}

GrapheneSheet::GrapheneSheet(double fermi_level, double relaxation_time, double temperature,
                             Substrate substrate)
    : fermi_level_(fermi_level),
      relaxation_time_(relaxation_time),
      temperature_(temperature),
      substrate_(std::move(substrate)) {
  require(std::isfinite(fermi_level) && fermi_level >= 0.0, "Fermi level must be >= 0");
  require(std::isfinite(relaxation_time) && relaxation_time > 0.0,
          "relaxation time must be > 0");
  require(std::isfinite(temperature) && temperature > 0.0, "temperature must be > 0");
  if (const auto* c = std::get_if<ConstantPermittivity>(&substrate_))
    require(std::isfinite(c->value) && c->value >= 1.0, "substrate permittivity must be >= 1");
}

GrapheneSheet GrapheneSheet::from_electron_volts(double fermi_level_ev, double relaxation_time,
                                                 double temperature, Substrate substrate) {
  return GrapheneSheet(fermi_level_ev * electron_volt, relaxation_time, temperature,
                       std::move(substrate));
}

double fermi_occupation(double omega, double fermi_level, double temperature) {
  require(temperature > 0.0, "temperature must be > 0");
  const double x = (hbar * omega - fermi_level) / (boltzmann * temperature);
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

double sigma_drude(const GrapheneSheet& sheet, double xi) {
  require_frequency(xi);
  const double kT = boltzmann * sheet.temperature();
  const double weight = 2.0 * elementary_charge * elementary_charge * kT / (pi * hbar * hbar) *
                        log_two_cosh(sheet.fermi_level() / (2.0 * kT));
  return weight / (xi + 1.0 / sheet.relaxation_time());
}

double sigma_interband(const GrapheneSheet& sheet, double xi) {
  require_frequency(xi);
  if (xi == 0.0) return 0.0;

  const double kT = boltzmann * sheet.temperature();
  const double b = sheet.fermi_level() / kT;
  // With e = (xi/2) tan t the integral becomes (1/2xi) Int_0^{pi/2} G dt.
  auto integrand = [&](double t) {
    if (t >= 0.5 * pi) return 1.0;
    const double a = hbar * 0.5 * xi * std::tan(t) / kT;
    return pauli_factor(a, b);
  };

  std::vector<double> breaks{0.0};
  if (sheet.fermi_level() > 0.0) {
    // Fermi step at hbar e = E_F, width ~ kT on either side.
    const double e_f = sheet.fermi_level() / hbar;
    const double width = 8.0 * kT / hbar;
    for (double e : {e_f - width, e_f, e_f + width}) {
      if (e <= 0.0) continue;
      const double t = std::atan(2.0 * e / xi);
      if (t > breaks.back() && t < 0.5 * pi) breaks.push_back(t);
    }
  }
  breaks.push_back(0.5 * pi);

  QuadratureOptions opt;
  opt.rel_tol = 1e-10;
  opt.max_panels = 2000;
  const auto q = integrate(integrand, std::span<const double>(breaks), opt);
  if (!(q.error <= 1e-8 * std::abs(q.value)))
    fail(ErrorCode::QuadratureFailure,
         "interband conductivity integral did not converge (xi = " + std::to_string(xi) + ")");
  return elementary_charge * elementary_charge / (2.0 * pi * hbar) * q.value;
}

double sigma_total(const GrapheneSheet& sheet, double xi) {
  return sigma_drude(sheet, xi) + sigma_interband(sheet, xi);
}

bool conductivity_below_validity(const GrapheneSheet& sheet, double xi) noexcept {
  return xi < 1.0 / sheet.relaxation_time();
}

}  // namespace cpforge
