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

// Globally adaptive Gauss-Kronrod (10/21) quadrature over a finite interval
// split at caller-supplied breakpoints. The integrand may return a double or a
// std::array<double, N>; vector integrands share the same panels and every
// component must meet the tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

namespace cpforge {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 4000;
};

template <class V>
struct Quadrature {
  V value{};
  V error{};
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

// Kronrod abscissae on [0, 1]; odd entries are the 10-point Gauss nodes.
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980202420, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class V>
struct ValueTraits;

template <>
struct ValueTraits<double> {
  static constexpr std::size_t size = 1;
  static double& at(double& v, std::size_t) { return v; }
  static double at(const double& v, std::size_t) { return v; }
};

template <std::size_t N>
struct ValueTraits<std::array<double, N>> {
  static constexpr std::size_t size = N;
  static double& at(std::array<double, N>& v, std::size_t i) { return v[i]; }
  static double at(const std::array<double, N>& v, std::size_t i) { return v[i]; }
};

template <class V>
struct Panel {
  double a;
  double b;
  V value;
  V error;
  double badness;
};

template <class V, class F>
Panel<V> gauss_kronrod_panel(F& f, double a, double b) {
  using T = ValueTraits<V>;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  V kronrod{};
  V gauss{};
  const V fc = f(center);
  for (std::size_t c = 0; c < T::size; ++c)
    T::at(kronrod, c) = kKronrodWeights[10] * T::at(fc, c);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    const V f1 = f(center - dx);
    const V f2 = f(center + dx);
    for (std::size_t c = 0; c < T::size; ++c) {
      const double s = T::at(f1, c) + T::at(f2, c);
      T::at(kronrod, c) += kKronrodWeights[j] * s;
      if (j % 2 == 1) T::at(gauss, c) += kGaussWeights[j / 2] * s;
    }
  }
  Panel<V> p{a, b, {}, {}, 0.0};
  for (std::size_t c = 0; c < T::size; ++c) {
    const double k = T::at(kronrod, c) * half;
    const double g = T::at(gauss, c) * half;
    T::at(p.value, c) = k;
    T::at(p.error, c) = std::abs(k - g);
  }
  return p;
}

}  // namespace detail

/// Integrates `f` over [breaks.front(), breaks.back()], starting from one
/// panel per breakpoint interval and bisecting the worst panel until every
/// component satisfies error <= max(abs_tol, rel_tol * |value|).
template <class F>
auto integrate(F&& f, std::span<const double> breaks,
               const QuadratureOptions& options = {})
    -> Quadrature<std::decay_t<std::invoke_result_t<F&, double>>> {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  using T = detail::ValueTraits<V>;
  using P = detail::Panel<V>;

  Quadrature<V> out;
  if (breaks.size() < 2) return out;

  std::vector<P> panels;
  panels.reserve(breaks.size() + 64);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    panels.push_back(detail::gauss_kronrod_panel<V>(f, breaks[i], breaks[i + 1]));
    out.evaluations += 21;
  }
  if (panels.empty()) {
    out.converged = true;
    return out;
  }

  auto totals = [&](V& value, V& error) {
    value = V{};
    error = V{};
    for (const auto& p : panels)
      for (std::size_t c = 0; c < T::size; ++c) {
        T::at(value, c) += T::at(p.value, c);
        T::at(error, c) += T::at(p.error, c);
      }
  };

  V value{};
  V error{};
  totals(value, error);

  // Scale for ranking panels; fixed after the first pass so the heap keys
  // stay comparable.
  std::array<double, T::size> scale{};
  for (std::size_t c = 0; c < T::size; ++c) {
    double s = 0.0;
    for (const auto& p : panels) s += std::abs(T::at(p.value, c));
    scale[c] = std::max({std::abs(T::at(value, c)), 1e-3 * s, options.abs_tol,
                         std::numeric_limits<double>::min()});
  }
  auto badness = [&](const P& p) {
    double worst = 0.0;
    for (std::size_t c = 0; c < T::size; ++c)
      worst = std::max(worst, T::at(p.error, c) / scale[c]);
    return worst;
  };
  auto less = [](const P& x, const P& y) { return x.badness < y.badness; };
  for (auto& p : panels) p.badness = badness(p);
  std::make_heap(panels.begin(), panels.end(), less);

  auto done = [&]() {
    for (std::size_t c = 0; c < T::size; ++c) {
      const double tol =
          std::max(options.abs_tol, options.rel_tol * std::abs(T::at(value, c)));
      if (T::at(error, c) > tol) return false;
    }
    return true;
  };

  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (!done()) {
    if (static_cast<int>(panels.size()) >= options.max_panels) break;
    std::pop_heap(panels.begin(), panels.end(), less);
    P worst = panels.back();
    panels.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.badness == 0.0 ||
        (worst.b - worst.a) <= 64.0 * eps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      // Cannot refine further; keep it out of the heap ordering.
      worst.badness = -1.0;
      panels.push_back(worst);
      std::push_heap(panels.begin(), panels.end(), less);
      break;
    }
    P left = detail::gauss_kronrod_panel<V>(f, worst.a, mid);
    P right = detail::gauss_kronrod_panel<V>(f, mid, worst.b);
    out.evaluations += 42;
    left.badness = badness(left);
    right.badness = badness(right);
    panels.push_back(left);
    std::push_heap(panels.begin(), panels.end(), less);
    panels.push_back(right);
    std::push_heap(panels.begin(), panels.end(), less);
    totals(value, error);
  }

  // Deterministic final summation in interval order.
  std::sort(panels.begin(), panels.end(),
            [](const P& x, const P& y) { return x.a < y.a; });
  totals(value, error);
  out.value = value;
  out.error = error;
  out.converged = done();
  return out;
}

template <class F>
auto integrate(F&& f, double a, double b, const QuadratureOptions& options = {}) {
  const std::array<double, 2> breaks{a, b};
  return integrate(std::forward<F>(f), std::span<const double>(breaks), options);
}

}  // namespace cpforge
