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

// Finite-temperature polarization tensor of undoped gapless graphene.
//
// With f = sqrt(vF^2 kappa^2 + xi_n^2)/c and theta = (hbar c f / kB T) u,
// u = sqrt(x(1-x)), D = cosh(theta) + cos(2 pi n x), N = cos(2 pi n x) + exp(-theta):
//
//   Pi00 = pi hbar alpha kappa^2 / f + (8 hbar alpha c^2 / vF^2) Int_0^1 dx {
//            (kB T / hbar c) ln[1 + 2 cos(2 pi n x) e^-theta + e^-2theta]
//          - (xi_n / 2c)(1 - 2x) sin(2 pi n x) / D
//          + (xi_n^2 / c^2)(u / f) N / D }
//
//   Pitr = Pi00 + (pi hbar alpha / f)(f^2 + xi_n^2/c^2) + 8 hbar alpha Int_0^1 dx {
//            (xi_n / c)(1 - 2x) sin(2 pi n x) / D - (u / f)(f^2 + xi_n^2/c^2) N / D }
//
// The x-integrands are symmetric about x = 1/2. We integrate over [0, 1/2] in
// the variable phi with x = (1 - cos phi)/2, which makes u = sin(phi)/2 smooth
// at the endpoint.
//
// At n = 0 the thermal Pi_tr part nearly cancels the vacuum term for small
// kappa; the two are integrated together.
//
// For n >= 1 the Pi00 integrand is evaluated as the difference from its
// kappa = 0 value, whose integral vanishes identically; that keeps Pi00 ~ kappa^2
// accurate when vF kappa << xi_n.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"
#include "cpforge/quadrature.hpp"
#include "cpforge/reflection.hpp"

namespace cpforge {

namespace {

using namespace constants;

// exp(-theta) beyond which all thermal terms are below double resolution.
constexpr double kThetaCutoff = 50.0;

struct Phase {
  double x;           // position in [0, 1/2]
  double u;           // sqrt(x (1 - x))
  double one_minus_2x;
  double cs;          // cos(2 pi n x)
  double sn;          // sin(2 pi n x)
  double jacobian;    // dx/dphi
};

Phase phase(int n, double phi) {
  const double s = std::sin(0.5 * phi);
  Phase p;
  p.x = s * s;
  p.u = 0.5 * std::sin(phi);
  p.one_minus_2x = std::cos(phi);
  const double arg = 2.0 * pi * n * p.x;
  p.cs = std::cos(arg);
  p.sn = std::sin(arg);
  p.jacobian = p.u;
  return p;
}

// ln(1 + 2 cs w + w^2) and 1/D = 2w / (1 + 2 cs w + w^2) with w = e^-theta;
// finite for every theta >= 0.
struct Thermal {
  double log_term;
  double inv_d;
  double w;
};

Thermal thermal(double theta, double cs) {
  const double w = std::exp(-theta);
  const double q = 2.0 * cs * w + w * w;
  return {std::log1p(q), 2.0 * w / (1.0 + q), w};
}

// phi at which theta = scale * sin(phi) / 2 reaches the cutoff (pi/2 if never).
double cutoff_angle(double scale) {
  const double s = 2.0 * kThetaCutoff / scale;
  return s >= 1.0 ? 0.5 * pi : std::asin(s);
}

// Panel boundaries on [0, phi_max]: half periods of cos(2 pi n x) plus the
// midpoint of the first one.
std::vector<double> breakpoints(int n, double phi_max) {
  std::vector<double> b{0.0};
  auto add = [&](double x) {
    const double phi = std::acos(1.0 - 2.0 * x);
    if (phi > b.back() && phi < phi_max) b.push_back(phi);
  };
  if (n == 0) {
    add(0.0625);
  } else {
    add(0.25 / n);
    for (int k = 1; k <= n; ++k) add(0.5 * k / n);
  }
  b.push_back(phi_max);
  return b;
}

// Integrand of Pi00 minus its kappa = 0 counterpart (n >= 1), in units of
// kB T / (hbar c). `delta` = s - 1 with s = c f / xi_n.
double pi00_difference(int n, double delta, const Phase& p) {
  const double s = 1.0 + delta;
  const double theta1 = 2.0 * pi * n * p.u;
  const double dtheta = theta1 * delta;
  const double thetas = theta1 + dtheta;
  const double pin = pi * n;

  if (delta > 0.5) {
    // No cancellation to protect; direct difference of the two integrands.
    auto g = [&](double theta, double scale) {
      const auto t = thermal(theta, p.cs);
      return t.log_term - pin * p.one_minus_2x * p.sn * t.inv_d +
             2.0 * pin * (p.u / scale) * (p.cs + t.w) * t.inv_d;
    };
    return g(thetas, s) - g(theta1, 1.0);
  }

  const double d1 = std::cosh(theta1) + p.cs;
  const double ds = std::cosh(thetas) + p.cs;
  const double dd = 2.0 * std::sinh(0.5 * (thetas + theta1)) * std::sinh(0.5 * dtheta);
  const double dlog = -dtheta + std::log1p(dd / d1);
  const double dsin = pin * p.one_minus_2x * p.sn * dd / (ds * d1);
  const double e1 = std::exp(-theta1);
  const double n1 = p.cs + e1;
  const double dn = e1 * std::expm1(-dtheta);
  const double dnum = dn * d1 - n1 * dd - delta * n1 * d1 - delta * n1 * dd;
  const double dfrac = 2.0 * pin * p.u * dnum / (s * ds * d1);
  return dlog + dsin + dfrac;
}

}  // namespace

PolarizationTensor polarization_tensor(int n, double kappa, double temperature,
                                       double fermi_velocity) {
  require(n >= 0, "Matsubara index must be >= 0");
  require(std::isfinite(kappa) && kappa >= 0.0, "wavevector must be finite and >= 0");
  require(std::isfinite(temperature) && temperature > 0.0, "temperature must be > 0");
  require(std::isfinite(fermi_velocity) && fermi_velocity > 0.0,
          "Fermi velocity must be > 0");
  if (n == 0 && kappa == 0.0)
    fail(ErrorCode::UnsupportedLimit, "polarization tensor undefined at (n, kappa) = (0, 0)");

  const double kT = boltzmann * temperature;
  const double xi = 2.0 * pi * n * kT / hbar;
  const double vk = fermi_velocity * kappa;
  const double f = std::hypot(vk, xi) / speed_of_light;
  const double big_lambda = hbar * speed_of_light * f / kT;  // theta / u
  const double xi_c = xi / speed_of_light;

  const double vacuum00 = pi * hbar * fine_structure * kappa * kappa / f;
  const double vacuum_tr = pi * hbar * fine_structure / f * (f * f + xi_c * xi_c);
  // Prefactors turning the dimensionless integrals into Pi units.
  const double scale00 =
      8.0 * fine_structure * speed_of_light * kT / (fermi_velocity * fermi_velocity);
  const double scale_tr = 8.0 * fine_structure * kT / speed_of_light;

  // s - 1 without cancellation.
  double delta = 0.0;
  if (n > 0) {
    const double r = vk / xi;
    delta = r * r / (1.0 + std::sqrt(1.0 + r * r));
  }
  const double s = 1.0 + delta;

  auto integrand = [&](double phi) -> std::array<double, 2> {
    const Phase p = phase(n, phi);
    double g00 = 0.0;
    double gtr = 0.0;
    if (n == 0) {
      const double theta = big_lambda * p.u;
      g00 = 2.0 * std::log1p(std::exp(-theta));
      // Vacuum and thermal parts combined: Pi_tr - Pi_00 = 8 hbar alpha f Int u tanh(theta/2).
      gtr = big_lambda * p.u * std::tanh(0.5 * theta);
    } else {
      g00 = pi00_difference(n, delta, p);
      const auto t = thermal(big_lambda * p.u, p.cs);
      gtr = 2.0 * pi * n * p.one_minus_2x * p.sn * t.inv_d -
            big_lambda * (1.0 + 1.0 / (s * s)) * p.u * (p.cs + t.w) * t.inv_d;
    }
    return {g00 * p.jacobian, gtr * p.jacobian};
  };

  // For n >= 1 the Pi00 difference decays with theta at kappa = 0.
  const double phi_max = cutoff_angle(n == 0 ? big_lambda : 2.0 * pi * n);
  const auto breaks = breakpoints(n, phi_max);

  const double floor00 = 1e-12 * vacuum00 / scale00;
  const double floor_tr = 1e-12 * vacuum_tr / scale_tr;

  QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  opt.max_panels = 4000;
  opt.abs_tol = 0.01 * std::min(floor00, floor_tr);
  const auto q = integrate(integrand, std::span<const double>(breaks), opt);

  // Integrals over [0, 1] are twice the half-range ones. Beyond the cutoff
  // tanh = 1, and Int u dx = (phi - sin(phi) cos(phi)) / 8.
  const double tail_tr =
      n == 0 ? big_lambda * (0.5 * pi - phi_max + std::sin(phi_max) * std::cos(phi_max)) / 8.0 : 0.0;
  const double i00 = 2.0 * q.value[0];
  const double itr = 2.0 * (q.value[1] + tail_tr);
  const double e00 = 2.0 * q.error[0];
  const double etr = 2.0 * q.error[1];

  if (e00 > std::max(1e-9 * std::abs(i00), floor00) ||
      etr > std::max(1e-9 * std::abs(itr), floor_tr))
    fail(ErrorCode::QuadratureFailure,
         "polarization tensor x-integral did not converge (n = " + std::to_string(n) +
             ", kappa = " + std::to_string(kappa) + ")");

  const double pi00 = vacuum00 + scale00 * i00;
  const double excess = (n == 0 ? 0.0 : vacuum_tr) + scale_tr * itr;
  return {pi00, pi00 + excess, excess};
}

double polarization_tensor_00(int n, double kappa, double temperature, double fermi_velocity) {
  return polarization_tensor(n, kappa, temperature, fermi_velocity).pi00;
}

double polarization_tensor_tr(int n, double kappa, double temperature, double fermi_velocity) {
  return polarization_tensor(n, kappa, temperature, fermi_velocity).pitr;
}

}  // namespace cpforge
