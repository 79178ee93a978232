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

// Reflection coefficients of planar interfaces on the imaginary frequency
// axis. `xi` is in rad/s and `kappa` (in-plane wavevector) in 1/m.

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <variant>

#include "cpforge/constants.hpp"
#include "cpforge/materials.hpp"

namespace cpforge {

struct IdealMetal {};

struct DrudeHalfSpace {
  DrudeMetal metal;
};

struct LocalGraphene {
  GrapheneSheet sheet;
};

/// Undoped gapless graphene described by its finite-temperature polarization
/// tensor. Only defined at Matsubara frequencies.
struct NonlocalGraphene {
  double temperature;
  double fermi_velocity = constants::graphene_fermi_velocity;
};

using InterfaceModel = std::variant<IdealMetal, DrudeHalfSpace, LocalGraphene, NonlocalGraphene>;

struct ReflectionPair {
  double rs;
  double rp;
};

struct AxialWavevectors {
  double gamma0_tilde;  // sqrt(xi^2/c^2 + kappa^2)
  double gamma_tilde;   // sqrt(xi^2 eps/c^2 + kappa^2)
};

/// `xi2_eps` is xi^2 * eps, passed as a product so that the static Drude
/// limit (eps -> inf, xi^2 eps -> 0) stays finite.
AxialWavevectors axial_wavevectors(double xi, double kappa, double xi2_eps);

ReflectionPair fresnel_halfspace(const Permittivity& eps, double xi, double kappa);

ReflectionPair reflect_graphene_local(const GrapheneSheet& sheet, double xi, double kappa);
/// Same with the conductivity [S] already evaluated at `xi`.
ReflectionPair reflect_graphene_local(const GrapheneSheet& sheet, double sigma, double xi,
                                      double kappa);

struct PolarizationTensor {
  double pi00;  // [J s / m]
  double pitr;
  double excess = 0.0;  // pitr - pi00, free of cancellation
};

/// Polarization tensor components of undoped graphene at the Matsubara
/// frequency xi_n = 2 pi n kB T / hbar. Throws UnsupportedLimit for
/// (n, kappa) = (0, 0) and QuadratureFailure if the x-integrals miss 1e-9.
PolarizationTensor polarization_tensor(int n, double kappa, double temperature,
                                       double fermi_velocity = constants::graphene_fermi_velocity);
double polarization_tensor_00(int n, double kappa, double temperature,
                              double fermi_velocity = constants::graphene_fermi_velocity);
double polarization_tensor_tr(int n, double kappa, double temperature,
                              double fermi_velocity = constants::graphene_fermi_velocity);

ReflectionPair reflect_graphene_nonlocal(int n, double kappa, double temperature,
                                         double fermi_velocity = constants::graphene_fermi_velocity);
ReflectionPair reflection_from_polarization(const PolarizationTensor& pi, double xi, double kappa);

/// Memo of polarization tensor values keyed on (n, kappa, T, vF). Safe for
/// concurrent readers; concurrent writers of the same key store equal values.
class PolarizationCache {
 public:
  PolarizationTensor get(int n, double kappa, double temperature, double fermi_velocity);
  std::size_t size() const;

 private:
  struct Key {
    int n;
    std::uint64_t kappa, temperature, fermi_velocity;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, PolarizationTensor, KeyHash> table_;
};

/// Reflection coefficients of one interface prepared at a fixed frequency, so
/// that per-frequency work (conductivities, permittivities) is done once.
class ReflectionEvaluator {
 public:
  /// `matsubara_index` is required for NonlocalGraphene, whose frequency is
  /// then taken from the index; `cache` is optional.
  ReflectionEvaluator(const InterfaceModel& model, double xi,
                      std::optional<int> matsubara_index = std::nullopt,
                      PolarizationCache* cache = nullptr);

  ReflectionPair operator()(double kappa) const;

  double frequency() const noexcept { return xi_; }

 private:
  const InterfaceModel* model_;
  double xi_;
  std::optional<int> index_;
  PolarizationCache* cache_;
  double xi2_eps_ = 0.0;     // xi^2 eps of half-space or substrate
  double eps_ = 1.0;         // finite permittivity where used
  bool eps_infinite_ = false;
  double sigma_ = 0.0;       // graphene conductivity at xi
};

/// Dispatcher over all models. Throws UnsupportedLimit at (xi, kappa) = (0, 0)
/// and MissingIndex for NonlocalGraphene without a Matsubara index.
ReflectionPair reflect(const InterfaceModel& model, double xi, double kappa,
                       std::optional<int> matsubara_index = std::nullopt);

/// Material temperature carried by the model, if any.
std::optional<double> material_temperature(const InterfaceModel& model);

}  // namespace cpforge
