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


// Brute-force reference computations shared by the unit and acceptance tests.
// They are deliberately simple and slow; none calls the code under test.

#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

#include "cpforge/constants.hpp"
#include "cpforge/particle.hpp"
#include "cpforge/reflection.hpp"

namespace oracle {

using namespace cpforge;
using namespace cpforge::constants;

inline double matsubara(int n, double t) { return 2.0 * pi * n * boltzmann * t / hbar; }

// Brute-force interband conductivity: trapezoid over e in [0, e1] with 1e7
// uniform points, e1 = (max(E_F, 0) + 40 kT)/hbar, plus the analytic tail
// beyond e1 where the Pauli factor is 1 to within e^-40.
inline double sigma_interband_trapezoid(double fermi_level, double t, double xi) {
  const double kt = boltzmann * t;
  const double e1 = (std::max(fermi_level, 0.0) + 40.0 * kt) / hbar;
  const long n = 10000000;
  const double h = e1 / n;
  auto g = [&](double e) {
    const double lo = 1.0 / (std::exp((-hbar * e - fermi_level) / kt) + 1.0);
    const double hi = 1.0 / (std::exp((hbar * e - fermi_level) / kt) + 1.0);
    return (lo - hi) / (xi * xi + 4.0 * e * e);
  };
  double sum = 0.5 * (g(0.0) + g(e1));
  for (long i = 1; i < n; ++i) sum += g(i * h);
  const double tail = (0.5 * pi - std::atan(2.0 * e1 / xi)) / (2.0 * xi);
  return elementary_charge * elementary_charge * xi / (pi * hbar) * (sum * h + tail);
}

// Composite Simpson over the full x range [0, 1], mapped by x = (1 - cos p)/2,
// p in [0, pi], of the direct (non-differenced) integrands.
inline PolarizationTensor simpson_tensor(int n, double kappa, double t, double vf, long panels) {
  using L = long double;
  const L c = speed_of_light, hb = hbar, a = fine_structure, kt = boltzmann * t;
  const L xi = 2.0L * pi * n * kt / hb;
  const L f = std::sqrt(L(vf) * vf * kappa * kappa + xi * xi) / c;
  const L big = hb * c * f / kt;
  const L xic = xi / c;
  auto g = [&](L p, L& g00, L& gtr) {
    const L x = (1.0L - std::cos(p)) / 2.0L;
    const L jac = std::sin(p) / 2.0L;
    const L u = std::sqrt(x * (1.0L - x));
    const L th = big * u;
    const L cs = std::cos(2.0L * pi * n * x), sn = std::sin(2.0L * pi * n * x);
    const L d = std::cosh(th) + cs;
    const L num = cs + std::exp(-th);
    g00 = jac * ((kt / (hb * c)) * std::log1p(2.0L * cs * std::exp(-th) + std::exp(-2.0L * th)) -
                 (xic / 2.0L) * (1.0L - 2.0L * x) * sn / d + xic * xic * (u / f) * num / d);
    gtr = jac * (xic * (1.0L - 2.0L * x) * sn / d - (u / f) * (f * f + xic * xic) * num / d);
  };
  const L h = L(pi) / panels;
  L s00 = 0.0L, str = 0.0L;
  for (long i = 0; i <= panels; ++i) {
    L a00, atr;
    g(i * h, a00, atr);
    const L w = (i == 0 || i == panels) ? 1.0L : (i % 2 ? 4.0L : 2.0L);
    s00 += w * a00;
    str += w * atr;
  }
  s00 *= h / 3.0L;
  str *= h / 3.0L;
  const L pi00 = L(pi) * hb * a * kappa * kappa / f + 8.0L * hb * a * c * c / (L(vf) * vf) * s00;
  const L excess = L(pi) * hb * a / f * (f * f + xic * xic) + 8.0L * hb * a * str;
  return {static_cast<double>(pi00), static_cast<double>(pi00 + excess), static_cast<double>(excess)};
}

// Integral representation of the axial depolarization factor.
inline double depolarization_integral(double a, double b) {
  boost::math::quadrature::exp_sinh<double> q;
  auto g = [&](double s) { return 1.0 / (std::pow(s + a * a, 1.5) * (s + b * b)); };
  return 0.5 * a * b * b * q.integrate(g, 1e-15);
}

// Energy and force kernels for a local graphene sheet with conductivity sigma,
// by a kappa trapezoid with n panels on [0, 25/d]. Needs alpha.x == alpha.y.
inline std::pair<double, double> kappa_trapezoid(double sigma, double xi, double d,
                                                 const PolarizabilityTensor& a, long n) {
  const double k0 = xi / speed_of_light;
  const double k_max = 50.0 / (2 * d), h = k_max / n;
  long double se = 0.0L, sf = 0.0L;
  for (long i = 0; i <= n; ++i) {
    const double k = i * h;
    const double g0 = std::sqrt(k0 * k0 + k * k);
    const double rs = -vacuum_permeability * sigma * xi / (2 * g0 + vacuum_permeability * sigma * xi);
    const double rp = sigma * g0 / (sigma * g0 + 2 * vacuum_permittivity * xi);
    const double b = k0 * k0 * rs * a.x - rp * (a.x * g0 * g0 + k * k * a.z);
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    se += w * k * std::exp(-2 * d * g0) / (2 * g0) * b;
    sf += w * k * std::exp(-2 * d * g0) * b;
  }
  return {static_cast<double>(se * h), static_cast<double>(sf * h)};
}

}  // namespace oracle
