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

#include "cpforge/reflection.hpp"

#include <bit>
#include <cmath>
#include <mutex>

#include "cpforge/error.hpp"

namespace cpforge {

namespace {

using namespace constants;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_point(double xi, double kappa) {
  require(std::isfinite(xi) && xi >= 0.0, "frequency must be finite and >= 0");
  require(std::isfinite(kappa) && kappa >= 0.0, "wavevector must be finite and >= 0");
  if (xi == 0.0 && kappa == 0.0)
    fail(ErrorCode::UnsupportedLimit, "reflection undefined at (xi, kappa) = (0, 0)");
}

// xi^2 eps for a Drude medium, finite down to xi = 0.
double drude_xi2_eps(const DrudeMetal& m, double xi) {
  const double wp = m.plasma_frequency();
  return xi * xi + wp * wp * xi / (xi + m.damping());
}

ReflectionPair halfspace(double xi, double kappa, double eps, double xi2_eps) {
  const auto w = axial_wavevectors(xi, kappa, xi2_eps);
  const double g0 = w.gamma0_tilde;
  const double g = w.gamma_tilde;
  // gamma0 - gamma = -(xi^2 eps - xi^2) / c^2 / (gamma0 + gamma)
  const double dxi2 = (xi2_eps - xi * xi) / (speed_of_light * speed_of_light);
  const double rs = -dxi2 / ((g0 + g) * (g0 + g));
  const double rp = (g0 * eps - g) / (g0 * eps + g);
  return {rs, rp};
}

ReflectionPair graphene(double xi, double kappa, double sigma, double eps, double xi2_eps) {
  const auto w = axial_wavevectors(xi, kappa, xi2_eps);
  const double g0 = w.gamma0_tilde;
  const double g = w.gamma_tilde;
  const double magnetic = vacuum_permeability * sigma * xi;
  const double electric = sigma * g * g0 / (vacuum_permittivity * xi);
  const double dxi2 = (xi2_eps - xi * xi) / (speed_of_light * speed_of_light);
  // gamma0 - gamma written without cancellation.
  const double rs = (-dxi2 / (g0 + g) - magnetic) / (g0 + g + magnetic);
  const double rp = (g0 * eps - g + electric) / (g0 * eps + g + electric);
  return {rs, rp};
}

}  // namespace

AxialWavevectors axial_wavevectors(double xi, double kappa, double xi2_eps) {
  const double k0 = xi / speed_of_light;
  return {std::hypot(k0, kappa),
          std::sqrt(xi2_eps / (speed_of_light * speed_of_light) + kappa * kappa)};
}

ReflectionPair fresnel_halfspace(const Permittivity& eps, double xi, double kappa) {
  require_point(xi, kappa);
  if (eps.is_infinite()) return {-1.0, 1.0};
  const double e = eps.value();
  require(e >= 1.0, "half-space permittivity must be >= 1");
  return halfspace(xi, kappa, e, xi * xi * e);
}

ReflectionPair reflect_graphene_local(const GrapheneSheet& sheet, double sigma, double xi,
                                      double kappa) {
  require_point(xi, kappa);
  // sigma/xi -> inf drives rp -> 1; mu0 sigma xi -> 0 and xi^2 eps -> 0 give rs -> 0.
  if (xi == 0.0) return {0.0, 1.0};
  const auto eps = substrate_permittivity(sheet.substrate(), xi);
  const double e = eps.value();
  return graphene(xi, kappa, sigma, e, xi * xi * e);
}

ReflectionPair reflect_graphene_local(const GrapheneSheet& sheet, double xi, double kappa) {
  require_point(xi, kappa);
  if (xi == 0.0) return {0.0, 1.0};
  return reflect_graphene_local(sheet, sigma_total(sheet, xi), xi, kappa);
}

ReflectionPair reflection_from_polarization(const PolarizationTensor& pi, double xi,
                                            double kappa) {
  const double g0 = std::hypot(xi / speed_of_light, kappa);
  const double k2 = kappa * kappa;
  const double rp = g0 * pi.pi00 / (2.0 * hbar * k2 + g0 * pi.pi00);
  const double k0sq = (xi / speed_of_light) * (xi / speed_of_light);
  const double transverse = k2 * pi.excess - k0sq * pi.pi00;
  const double rs = -transverse / (2.0 * hbar * k2 * g0 + transverse);
  return {rs, rp};
}

ReflectionPair reflect_graphene_nonlocal(int n, double kappa, double temperature,
                                         double fermi_velocity) {
  require(n >= 0, "Matsubara index must be >= 0");
  const double xi = 2.0 * pi * n * boltzmann * temperature / hbar;
  require_point(xi, kappa);
  if (kappa == 0.0) {
    // Pi00 and the transverse combination both vanish as kappa^2; the ratio
    // is the local conductivity of clean undoped graphene.
    const GrapheneSheet clean(0.0, 1.0, temperature);
    return reflect_graphene_local(clean, sigma_total(clean, xi), xi, 0.0);
  }
  return reflection_from_polarization(polarization_tensor(n, kappa, temperature, fermi_velocity),
                                      xi, kappa);
}

std::size_t PolarizationCache::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = std::hash<int>{}(k.n);
  for (std::uint64_t v : {k.kappa, k.temperature, k.fermi_velocity})
    h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

PolarizationTensor PolarizationCache::get(int n, double kappa, double temperature,
                                          double fermi_velocity) {
  const Key key{n, std::bit_cast<std::uint64_t>(kappa), std::bit_cast<std::uint64_t>(temperature),
                std::bit_cast<std::uint64_t>(fermi_velocity)};
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) {
      return it->second;
    }
  }
  const auto value = polarization_tensor(n, kappa, temperature, fermi_velocity);
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
  return value;
}

std::size_t PolarizationCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

ReflectionEvaluator::ReflectionEvaluator(const InterfaceModel& model, double xi,
                                         std::optional<int> matsubara_index,
                                         PolarizationCache* cache)
    : model_(&model), xi_(xi), index_(matsubara_index), cache_(cache) {
  require(std::isfinite(xi) && xi >= 0.0, "frequency must be finite and >= 0");
  std::visit(overloaded{
                 [](const IdealMetal&) {},
                 [&](const DrudeHalfSpace& h) {
                   if (xi_ > 0.0) {
                     xi2_eps_ = drude_xi2_eps(h.metal, xi_);
                     eps_ = 1.0 + h.metal.susceptibility(xi_);
                   } else {
                     eps_infinite_ = true;
                   }
                 },
                 [&](const LocalGraphene& g) {
                   if (xi_ == 0.0) return;
                   sigma_ = sigma_total(g.sheet, xi_);
                   if (const auto* m = std::get_if<DrudeMetal>(&g.sheet.substrate())) {
                     xi2_eps_ = drude_xi2_eps(*m, xi_);
                     eps_ = 1.0 + m->susceptibility(xi_);
                   } else {
                     eps_ = substrate_permittivity(g.sheet.substrate(), xi_).value();
                     xi2_eps_ = xi_ * xi_ * eps_;
                   }
                 },
                 [&](const NonlocalGraphene& g) {
                   if (!index_)
                     fail(ErrorCode::MissingIndex,
                          "nonlocal graphene needs the Matsubara index of the frequency");
                   require(*index_ >= 0, "Matsubara index must be >= 0");
                   xi_ = 2.0 * pi * *index_ * boltzmann * g.temperature / hbar;
                 },
             },
             model);
}

ReflectionPair ReflectionEvaluator::operator()(double kappa) const {
  require_point(xi_, kappa);
  return std::visit(
      overloaded{
          [](const IdealMetal&) { return ReflectionPair{-1.0, 1.0}; },
          [&](const DrudeHalfSpace&) {
            if (xi_ == 0.0) return ReflectionPair{0.0, 1.0};
            return halfspace(xi_, kappa, eps_, xi2_eps_);
          },
          [&](const LocalGraphene&) {
            if (xi_ == 0.0) return ReflectionPair{0.0, 1.0};
            return graphene(xi_, kappa, sigma_, eps_, xi2_eps_);
          },
          [&](const NonlocalGraphene& g) {
            if (kappa == 0.0 || cache_ == nullptr)
              return reflect_graphene_nonlocal(*index_, kappa, g.temperature, g.fermi_velocity);
            return reflection_from_polarization(
                cache_->get(*index_, kappa, g.temperature, g.fermi_velocity), xi_, kappa);
          },
      },
      *model_);
}

ReflectionPair reflect(const InterfaceModel& model, double xi, double kappa,
                       std::optional<int> matsubara_index) {
  if (std::holds_alternative<NonlocalGraphene>(model) && !matsubara_index)
    fail(ErrorCode::MissingIndex, "nonlocal graphene needs the Matsubara index of the frequency");
  require_point(xi, kappa);
  return ReflectionEvaluator(model, xi, matsubara_index)(kappa);
}

std::optional<double> material_temperature(const InterfaceModel& model) {
  if (const auto* g = std::get_if<LocalGraphene>(&model)) return g->sheet.temperature();
  if (const auto* g = std::get_if<NonlocalGraphene>(&model)) return g->temperature;
  return std::nullopt;
}

}  // namespace cpforge
