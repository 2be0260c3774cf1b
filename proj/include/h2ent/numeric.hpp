// Copyright 2026 The h2ent Authors
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

/// \file numeric.hpp
/// One-dimensional numerics: composite Simpson quadrature with panel
/// doubling, golden-section minimization, bisection, and two-column linear
/// least squares.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "h2ent/error.hpp"

namespace h2ent::numeric {

struct QuadratureResult {
  double value = 0.0;
  std::size_t panels = 0;
};

inline constexpr std::size_t kMaxPanels = std::size_t{1} << 20;

/// Composite Simpson rule, doubling the panel count until two successive
/// estimates differ by less than `tol`. Function values are reused across
/// refinements.
template <typename F>
QuadratureResult simpson(F&& f, double a, double b, double tol = 1e-12) {
  if (!(a < b))
    throw Error(ErrorCode::InvalidParams, "simpson: need a < b");
  std::size_t n = 2;
  double h = (b - a) / static_cast<double>(n);
  double ends = f(a) + f(b);
  double evens = 0.0;            // interior nodes shared with the coarser grid
  double odds = f(a + h);        // new midpoints
  double prev = h / 3.0 * (ends + 4.0 * odds + 2.0 * evens);
  while (n < kMaxPanels) {
    evens += odds;
    n *= 2;
    h = (b - a) / static_cast<double>(n);
    odds = 0.0;
    for (std::size_t i = 1; i < n; i += 2) odds += f(a + static_cast<double>(i) * h);
    const double cur = h / 3.0 * (ends + 4.0 * odds + 2.0 * evens);
    if (std::abs(cur - prev) < tol && n >= 8) return {cur, n};
    prev = cur;
  }
  throw Error(ErrorCode::QuadratureNotConverged,
              "simpson: no convergence to " + std::to_string(tol) + " within 2^20 panels");
}

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-12) {
  return simpson(std::forward<F>(f), a, b, tol).value;
}

struct MinimumResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum of a unimodal function on [a, b].
template <typename F>
MinimumResult golden_section_minimize(F&& f, double a, double b, double tol = 1e-6) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

/// Root of f on [a, b] by bisection; f(a) and f(b) must differ in sign.
template <typename F>
double bisect(F&& f, double a, double b, double tol = 1e-10) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0))
    throw Error(ErrorCode::InvalidParams, "bisect: root is not bracketed");
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

struct TwoTermFit {
  double c1 = 0.0;
  double c2 = 0.0;
  double rss = 0.0;  // unweighted residual sum of squares
};

/// Least squares y ~ c1 u + c2 v by modified Gram-Schmidt on the weighted
/// design matrix. Empty `weights` means unit weights.
inline TwoTermFit least_squares_2(std::span<const double> u, std::span<const double> v,
                                  std::span<const double> y,
                                  std::span<const double> weights = {}) {
  const std::size_t n = y.size();
  if (u.size() != n || v.size() != n || (!weights.empty() && weights.size() != n))
    throw Error(ErrorCode::InvalidParams, "least_squares_2: size mismatch");
  if (n < 2) throw Error(ErrorCode::TooFewSamples, "least_squares_2: need at least two points");

  std::vector<double> q1(n), q2(n), wy(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    q1[i] = w * u[i];
    q2[i] = w * v[i];
    wy[i] = w * y[i];
  }
  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };
  const double r11 = std::sqrt(dot(q1, q1));
  if (!(r11 > 0.0)) throw Error(ErrorCode::SingularBasis, "least_squares_2: first column is zero");
  for (auto& x : q1) x /= r11;
  const double r12 = dot(q1, q2);
  for (std::size_t i = 0; i < n; ++i) q2[i] -= r12 * q1[i];
  const double r22 = std::sqrt(dot(q2, q2));
  const double scale = std::sqrt(dot(q1, q1) * r11 * r11 + r12 * r12);
  if (!(r22 > 1e-12 * scale))
    throw Error(ErrorCode::SingularBasis, "least_squares_2: basis columns are linearly dependent");
  for (auto& x : q2) x /= r22;

  const double b1 = dot(q1, wy), b2 = dot(q2, wy);
  TwoTermFit fit;
  fit.c2 = b2 / r22;
  fit.c1 = (b1 - r12 * fit.c2) / r11;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - fit.c1 * u[i] - fit.c2 * v[i];
    fit.rss += r * r;
  }
  return fit;
}

}  // namespace h2ent::numeric
