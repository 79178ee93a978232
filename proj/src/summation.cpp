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


#include "cpforge/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <thread>

#include "cpforge/constants.hpp"
#include "cpforge/error.hpp"
#include "cpforge/quadrature.hpp"

namespace cpforge {

namespace {

using namespace constants;

constexpr int kConsecutiveSmall = 3;

struct Term {
  double energy;
  double force;
  double energy_error;
  double force_error;
  bool below_validity;
};

bool below_validity(const InterfaceModel& interface, double xi) {
  const auto* g = std::get_if<LocalGraphene>(&interface);
  return g != nullptr && conductivity_below_validity(g->sheet, xi);
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates terms [first, first + count) concurrently; results in n order.
std::vector<Term> evaluate_block(int first, int count, const MatsubaraGrid& grid,
                                 double distance, const PolarizabilityProvider& particle,
                                 const InterfaceModel& interface, PolarizationCache* cache,
                                 int workers) {
  std::vector<Term> out(count);
  auto work = [&](int i) {
    const int n = first + i;
    const double xi = grid.frequency(n);
    KernelRequest req;
    req.xi = xi;
    req.distance = distance;
    req.interface = &interface;
    req.alpha = particle(xi);
    req.matsubara_index = n;
    req.cache = cache;
    const auto k = evaluate_kernels(req);
    const double w = grid.weight(n) * boltzmann * grid.temperature() / (2.0 * pi);
    out[i] = {w * k.energy, w * k.force, w * k.energy_error, w * k.force_error,
              below_validity(interface, xi)};
  };

  if (workers <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) work(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const int stride = std::min(workers, count);
  for (int w = 0; w < stride; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < count; i += stride) work(i);
    }));
  // Rethrow the first failure in job order so errors are deterministic.
  for (auto& j : jobs) j.wait();
  for (auto& j : jobs) j.get();
  return out;
}

// Geometric tail estimate from the last terms; infinite if not contracting.
double tail_bound(const std::vector<double>& terms) {
  const std::size_t m = terms.size();
  if (m < 4) return INFINITY;
  double q = 0.0;
  for (std::size_t k = m - 3; k < m; ++k) {
    if (terms[k - 1] == 0.0) {
      if (terms[k] != 0.0) return INFINITY;
      continue;
    }
    q = std::max(q, std::abs(terms[k] / terms[k - 1]));
  }
  if (!(q < 1.0)) return INFINITY;
  return std::abs(terms.back()) * q / (1.0 - q);
}

}  // namespace

MatsubaraGrid::MatsubaraGrid(double temperature)
    : temperature_(temperature), step_(2.0 * pi * boltzmann * temperature / hbar) {
  require(std::isfinite(temperature) && temperature > 0.0, "temperature must be > 0");
}

int minimum_terms(double temperature, double distance) {
  require(std::isfinite(temperature) && temperature > 0.0, "temperature must be > 0");
  require(std::isfinite(distance) && distance > 0.0, "distance must be > 0");
  const double n = 5.0 * hbar * speed_of_light / (4.0 * pi * distance * boltzmann * temperature);
  return static_cast<int>(std::min(std::ceil(n), 1e9));
}

PolarizabilityProvider polarizability_of(const Spheroid& particle) {
  return [particle](double xi) { return polarizability_spheroid(particle, xi); };
}

CPResult cp_evaluate(double temperature, double distance, const PolarizabilityProvider& particle,
                     const InterfaceModel& interface, const SummationOptions& options) {
  const MatsubaraGrid grid(temperature);
  require(std::isfinite(distance) && distance > 0.0, "distance must be > 0");
  require(options.rel_tol > 0.0 && options.rel_tol < 1.0, "tolerance must be in (0, 1)");
  require(options.max_terms >= 1, "max_terms must be >= 1");
  require(static_cast<bool>(particle), "missing polarizability provider");

  std::shared_ptr<PolarizationCache> cache = options.cache;
  if (!cache && std::holds_alternative<NonlocalGraphene>(interface))
    cache = std::make_shared<PolarizationCache>();

  const int workers = worker_count(options.threads);
  const int block = std::max(8, 2 * workers);
  const int n_min = minimum_terms(temperature, distance);

  CPResult result;
  std::vector<double> energy_terms;
  std::vector<double> force_terms;
  double energy_err = 0.0;
  double force_err = 0.0;
  int small_run = 0;
  int n = 0;

  while (true) {
    const int count = std::min(block, options.max_terms - n);
    if (count <= 0)
      fail(ErrorCode::TruncationFailure,
           "Matsubara sum not converged within " + std::to_string(options.max_terms) + " terms");
    const auto terms =
        evaluate_block(n, count, grid, distance, particle, interface, cache.get(), workers);
    for (const Term& t : terms) {
      result.energy += t.energy;
      result.force += t.force;
      energy_err += t.energy_error;
      force_err += t.force_error;
      if (t.below_validity) ++result.below_validity_terms;
      energy_terms.push_back(t.energy);
      force_terms.push_back(t.force);
      ++n;

      const bool small = std::abs(t.energy) < options.rel_tol * std::abs(result.energy) &&
                         std::abs(t.force) < options.rel_tol * std::abs(result.force);
      small_run = small ? small_run + 1 : 0;
      if (small_run < kConsecutiveSmall || n <= n_min) continue;

      const double te = tail_bound(energy_terms);
      const double tf = tail_bound(force_terms);
      if (te <= options.rel_tol * std::abs(result.energy) &&
          tf <= options.rel_tol * std::abs(result.force)) {
        result.terms_used = n;
        result.energy_tail_bound = te;
        result.force_tail_bound = tf;
        result.quadrature_error = std::max(energy_err / std::abs(result.energy),
                                           force_err / std::abs(result.force));
        if (result.below_validity_terms > 0)
          result.warnings.push_back(std::to_string(result.below_validity_terms) +
                                    " term(s) use the graphene conductivity below 1/tau");
        return result;
      }
    }
  }
}

CPResult cp_evaluate(double temperature, double distance, const Spheroid& particle,
                     const InterfaceModel& interface, const SummationOptions& options) {
  return cp_evaluate(temperature, distance, polarizability_of(particle), interface, options);
}

CPResult cp_energy(double temperature, double distance, const Spheroid& particle,
                   const InterfaceModel& interface, const SummationOptions& options) {
  return cp_evaluate(temperature, distance, particle, interface, options);
}

CPResult cp_force(double temperature, double distance, const Spheroid& particle,
                  const InterfaceModel& interface, const SummationOptions& options) {
  return cp_evaluate(temperature, distance, particle, interface, options);
}

CPResult cp_evaluate_T0(double distance, const PolarizabilityProvider& particle,
                        const InterfaceModel& interface, double rel_tol) {
  require(std::isfinite(distance) && distance > 0.0, "distance must be > 0");
  require(rel_tol > 0.0 && rel_tol < 1.0, "tolerance must be in (0, 1)");
  require(static_cast<bool>(particle), "missing polarizability provider");
  if (std::holds_alternative<NonlocalGraphene>(interface))
    fail(ErrorCode::UnsupportedLimit,
         "the nonlocal graphene model is defined only at Matsubara frequencies");

  const double wc = characteristic_frequency(distance);
  constexpr double kUMax = 60.0;
  int below = 0;
  auto integrand = [&](double u) -> std::array<double, 2> {
    KernelRequest req;
    req.xi = u * wc;
    req.distance = distance;
    req.interface = &interface;
    req.alpha = particle(req.xi);
    const auto k = evaluate_kernels(req);
    if (below_validity(interface, req.xi)) ++below;
    return {k.energy, k.force};
  };
  const std::array<double, 9> breaks{0.0, 0.25, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, kUMax};
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  opt.max_panels = 2000;
  const auto q = integrate(integrand, std::span<const double>(breaks), opt);

  const double scale = hbar * wc / (4.0 * pi * pi);
  CPResult result;
  result.energy = scale * q.value[0];
  result.force = scale * q.value[1];
  result.quadrature_error =
      std::max(q.error[0] / std::abs(q.value[0]), q.error[1] / std::abs(q.value[1]));
  if (!(result.quadrature_error <= 10.0 * rel_tol))
    fail(ErrorCode::QuadratureFailure, "frequency integral did not converge");

  // Every implemented interface is bounded by the ideal metal, so the
  // dropped tail u > kUMax is bounded by its closed form.
  const auto a = particle(kUMax * wc);
  const double abar = a.transverse_mean();
  const double u = kUMax;
  const double two_d = 2.0 * distance;
  const double e = std::exp(-u);
  result.energy_tail_bound = scale * e / (two_d * two_d * two_d) *
                             (abar * ((u + 3.0) * u + 4.0) + a.z * (u + 2.0));
  result.force_tail_bound = scale * 2.0 * e / (two_d * two_d * two_d * two_d) *
                            (abar * (((u + 5.0) * u + 13.0) * u + 16.0) + a.z * ((u + 5.0) * u + 8.0));
  result.terms_used = q.evaluations;
  result.below_validity_terms = below;
  if (below > 0)
    result.warnings.push_back("graphene conductivity evaluated below 1/tau");
  return result;
}

CPResult cp_evaluate_T0(double distance, const Spheroid& particle,
                        const InterfaceModel& interface, double rel_tol) {
  return cp_evaluate_T0(distance, polarizability_of(particle), interface, rel_tol);
}

double normalize(const CPResult& numerator, const CPResult& reference, Quantity quantity) {
  const double num = quantity == Quantity::Force ? numerator.force : numerator.energy;
  const double ref = quantity == Quantity::Force ? reference.force : reference.energy;
  if (ref == 0.0 || !std::isfinite(ref))
    fail(ErrorCode::ZeroReference, "reference value is zero or not finite");
  return num / ref;
}

}  // namespace cpforge
