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


// Acceptance checks. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpforge/kernel.hpp"
#include "cpforge/materials.hpp"
#include "cpforge/particle.hpp"
#include "cpforge/summation.hpp"
#include "oracles.hpp"

using namespace cpforge;
using namespace cpforge::constants;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const InterfaceModel kIdeal = IdealMetal{};
const InterfaceModel kGold = DrudeHalfSpace{DrudeMetal::gold()};

InterfaceModel graphene(double ef_ev) {
  return LocalGraphene{GrapheneSheet::from_electron_volts(ef_ev, 1e-12, 300.0)};
}

double ratio(double d, const Spheroid& p, const InterfaceModel& m, SummationOptions o = {}) {
  return normalize(cp_evaluate(300.0, d, p, m, o), cp_evaluate(300.0, d, p, kIdeal, o));
}

std::vector<Spheroid> shapes() {
  std::vector<Spheroid> out;
  for (auto orient : {Orientation::AxisAlongZ, Orientation::AxisAlongX})
    for (double rho : {0.1, 1.0, 10.0}) out.push_back(Spheroid::with_aspect_ratio(rho, 10e-9, orient));
  return out;
}

std::string label(const Spheroid& p) {
  const double rho = p.semi_axis_b() / p.semi_axis_a();
  std::ostringstream s;
  s << "rho=" << std::round(rho * 1000) / 1000 << (p.orientation() == Orientation::AxisAlongZ ? "/z" : "/x");
  return s.str();
}

void criterion1(Outcome& o) {
  const double d = 100e-9, wc = characteristic_frequency(d);
  double worst = 0.0;
  for (const auto& a : {PolarizabilityTensor::isotropic(4e-24), PolarizabilityTensor{1e-24, 1e-24, 6e-24}}) {
    for (int i = 0; i < 50; ++i) {
      const double xi = 30.0 * i / 49.0 * wc;
      KernelRequest r;
      r.xi = xi;
      r.distance = d;
      r.interface = &kIdeal;
      r.alpha = a;
      const auto k = evaluate_kernels(r);
      worst = std::max({worst, rel(k.energy, ideal_metal_energy_kernel(xi, d, a)),
                        rel(k.force, ideal_metal_force_kernel(xi, d, a))});
    }
  }
  o.detail << "max relative deviation " << worst << " on 50 points u in [0, 30]";
  o.expect(worst <= 1e-10, "<= 1e-10");
}

void criterion2(Outcome& o) {
  const auto p = Spheroid::sphere(10e-9);
  const double r100 = ratio(100e-9, p, kGold), r50 = ratio(50e-6, p, kGold);
  o.detail << "F/F_IM = " << r100 << " at 100 nm, " << r50 << " at 50 um";
  o.expect(r100 >= 0.70 && r100 <= 0.80, "[0.70, 0.80] at 100 nm");
  o.expect(r50 >= 0.98, ">= 0.98 at 50 um");
}

void criterion3(Outcome& o) {
  const auto p = Spheroid::sphere(10e-9);
  const auto g0 = graphene(0.0);
  double lo = 1.0, at = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double d = 100e-9 * std::pow(100.0, i / 39.0);
    const double r = ratio(d, p, g0);
    if (r < lo) lo = r, at = d;
  }
  const double r1 = ratio(100e-9, p, graphene(1.0));
  o.detail << "minimum F/F_IM = " << lo << " (d = " << at * 1e9 << " nm); E_F = 1 eV at 100 nm: " << r1;
  o.expect(lo >= 0.05 && lo <= 0.09, "minimum in [0.05, 0.09]");
  o.expect(r1 >= 0.09 && r1 <= 0.15, "E_F = 1 eV ratio in [0.09, 0.15]");
}

void criterion4(Outcome& o) {
  const double d = 50e-6;
  const std::vector<std::pair<std::string, InterfaceModel>> models{
      {"ideal", kIdeal},
      {"gold", kGold},
      {"graphene", graphene(0.0)},
      {"graphene-1eV", graphene(1.0)},
      {"graphene-nonlocal", NonlocalGraphene{300.0}}};
  double lo = 2.0;
  std::string where;
  for (const auto& [name, m] : models) {
    for (const auto& p : shapes()) {
      const double r = ratio(d, p, m);
      if (r < lo) lo = r, where = name + " " + label(p);
    }
  }
  o.detail << "smallest F/F_IM at 50 um = " << lo << " (" << where << ")";
  o.expect(lo >= 0.95, ">= 0.95");
}

void criterion5(Outcome& o) {
  const auto m = graphene(1.0);
  const auto sphere = Spheroid::sphere(10e-9);
  for (double d : {20e-9, 35e-9, 50e-9, 70e-9, 100e-9}) {
    const double rs = ratio(d, sphere, m);
    o.detail << " d=" << d * 1e9 << "nm: sphere " << rs;
    for (auto orient : {Orientation::AxisAlongZ, Orientation::AxisAlongX}) {
      for (double rho : {0.1, 10.0}) {
        const auto p = Spheroid::with_aspect_ratio(rho, 10e-9, orient);
        const double r = ratio(d, p, m);
        o.detail << ", " << label(p) << " " << r;
        std::ostringstream w;
        w << label(p) << " at " << d * 1e9 << " nm: " << r;
        o.expect(r >= 0.15 && r <= 0.55, w.str() + " outside [0.15, 0.55]");
        o.expect(r > rs, w.str() + " not above sphere");
      }
    }
    o.detail << ";";
  }
}

void criterion6(Outcome& o) {
  const auto sheet = GrapheneSheet::from_electron_volts(0.5, 1e-12, 300.0);
  bool low = true, high = true;
  for (int n = 1; n <= 6; ++n) {
    const double xi = oracle::matsubara(n, 300.0);
    low = low && sigma_drude(sheet, xi) > sigma_interband(sheet, xi);
  }
  for (int n = 8; n <= 400; ++n) {
    const double xi = oracle::matsubara(n, 300.0);
    high = high && sigma_interband(sheet, xi) > sigma_drude(sheet, xi);
  }
  const double u = rel(sigma_interband(sheet, 1e18), graphene_universal_conductivity);
  o.detail << "Drude dominates n = 1..6: " << (low ? "yes" : "no") << "; interband dominates n = 8..400: "
           << (high ? "yes" : "no") << "; sigma_I(1e18)/(e^2/4 hbar) - 1 = " << u;
  o.expect(low, "sigma_D > sigma_I for n <= 6");
  o.expect(high, "sigma_I > sigma_D for n >= 8");
  o.expect(u <= 0.01, "universal limit within 1%");
}

void criterion7(Outcome& o) {
  const auto local = graphene(0.0);
  const InterfaceModel nonlocal = NonlocalGraphene{300.0};
  double worst = 0.0;
  std::string where;
  for (double d : {50e-9, 100e-9, 300e-9, 1e-6}) {
    SummationOptions opt;
    opt.cache = std::make_shared<PolarizationCache>();
    for (const auto& p : shapes()) {
      const double fl = cp_evaluate(300.0, d, p, local, opt).force;
      const double fn = cp_evaluate(300.0, d, p, nonlocal, opt).force;
      const double dev = rel(fn, fl);
      if (dev > worst) {
        worst = dev;
        std::ostringstream w;
        w << label(p) << " at " << d * 1e9 << " nm";
        where = w.str();
      }
    }
  }
  o.detail << "largest |F_nonlocal/F_local - 1| = " << worst << " (" << where << ")";
  o.expect(worst < 0.15, "< 15%");
}

void criterion8(Outcome& o) {
  // Force against the finite-difference energy derivative.
  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> ld(std::log(50e-9), std::log(10e-6)), lrho(std::log(0.1), std::log(10.0)),
      ef(0.0, 1.0);
  SummationOptions tight;
  tight.rel_tol = 1e-13;
  double fd = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double d = std::exp(ld(rng)), h = d * 1e-4;
    const auto p = Spheroid::with_aspect_ratio(std::exp(lrho(rng)), 10e-9,
                                               i % 2 ? Orientation::AxisAlongX : Orientation::AxisAlongZ);
    const InterfaceModel m = i % 2 ? kGold : graphene(ef(rng));
    const double deriv = -(cp_evaluate(300.0, d + h, p, m, tight).energy -
                           cp_evaluate(300.0, d - h, p, m, tight).energy) / (2 * h);
    fd = std::max(fd, rel(deriv, cp_evaluate(300.0, d, p, m, tight).force));
  }
  o.expect(fd <= 1e-6, "F = -dH/dd to 1e-6");

  // Depolarization sum rule and integral representation.
  double rule = 0.0, integral = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double rho = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
    const auto l = depolarization_factors(1.0, rho);
    rule = std::max(rule, std::abs(l.x + l.y + l.z - 1.0));
    if (i % 10 == 0) integral = std::max(integral, rel(l.z, oracle::depolarization_integral(1.0, rho)));
  }
  o.expect(rule <= 1e-12, "sum rule to 1e-12");
  o.expect(integral <= 1e-10, "L_z integral representation to 1e-10");

  // Sphere limit of the spheroidal path.
  double sphere = 0.0;
  const auto s = Spheroid::sphere(10e-9);
  const PolarizabilityProvider iso = [&](double xi) {
    return PolarizabilityTensor::isotropic(polarizability_sphere(10e-9, DrudeMetal::gold(), xi));
  };
  for (const InterfaceModel* m : {&kGold, &kIdeal}) {
    for (double d : {30e-9, 1e-6}) {
      const auto a = cp_evaluate(300.0, d, s, *m), b = cp_evaluate(300.0, d, iso, *m);
      sphere = std::max({sphere, rel(a.force, b.force), rel(a.energy, b.energy)});
    }
  }
  o.expect(sphere <= 1e-14, "sphere equivalence to 1e-14");

  // Brute-force quadrature oracles.
  double sig = 0.0;
  for (double ef_ev : {0.0, 0.5}) {
    const auto sheet = GrapheneSheet::from_electron_volts(ef_ev, 1e-12, 300.0);
    for (double xi : {oracle::matsubara(1, 300.0), 3e15}) {
      sig = std::max(sig, rel(sigma_interband(sheet, xi),
                              oracle::sigma_interband_trapezoid(ef_ev * elementary_charge, 300.0, xi)));
    }
  }
  o.expect(sig <= 1e-6, "sigma_I epsilon-integral to 1e-6");

  double pi_dev = 0.0;
  for (auto [n, kappa] : {std::pair{3, 1e7}, std::pair{1, 1e8}, std::pair{0, 1e7}}) {
    const auto a = polarization_tensor(n, kappa, 300.0);
    const auto b = oracle::simpson_tensor(n, kappa, 300.0, graphene_fermi_velocity, 1000000);
    pi_dev = std::max({pi_dev, rel(a.pi00, b.pi00), rel(a.pitr, b.pitr), rel(a.excess, b.excess)});
  }
  o.expect(pi_dev <= 1e-7, "Pi x-integrals to 1e-7");

  const double d = 100e-9, xi = oracle::matsubara(1, 300.0);
  const auto sheet = GrapheneSheet(0.0, 1e-12, 300.0);
  const InterfaceModel gm = LocalGraphene{sheet};
  const PolarizabilityTensor alpha{2e-24, 2e-24, 9e-24};
  KernelRequest r;
  r.xi = xi;
  r.distance = d;
  r.interface = &gm;
  r.alpha = alpha;
  const auto k = evaluate_kernels(r);
  const auto [e, f] = oracle::kappa_trapezoid(sigma_total(sheet, xi), xi, d, alpha, 1000000);
  const double kap = std::max(rel(k.energy, e), rel(k.force, f));
  o.expect(kap <= 1e-6, "kappa integrals to 1e-6");

  o.detail << "finite difference " << fd << "; sum rule " << rule << "; L_z integral " << integral
           << "; sphere limit " << sphere << "; sigma_I " << sig << "; Pi " << pi_dev << "; kappa " << kap;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> all{
      {1, "ideal-metal oracle", 1.0, criterion1},
      {2, "gold vs ideal metal", 10.0, criterion2},
      {3, "graphene minimum", 60.0, criterion3},
      {4, "perfect-metal limit", 120.0, criterion4},
      {5, "anisotropy enhancement", 120.0, criterion5},
      {6, "conductivity crossover", 10.0, criterion6},
      {7, "nonlocal agreement", 300.0, criterion7},
      {8, "property suites", 300.0, criterion8},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) {
      o.pass = false;
      o.detail << " [over time budget]";
    }
    failed += !o.pass;
    std::printf("%s criterion %d (%s): %s (%.2f s, budget %.0f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.str().c_str(), secs, c.budget);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
