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

/// \file deviation.hpp
/// Correlation energy versus entanglement: the least-squares scale
///
///   alpha_min = int E_corr M dlambda / int M^2 dlambda
///
/// that minimizes int (E_corr - alpha M)^2 over a coupling window, the
/// residual profile Delta(lambda) = E_corr - alpha M, and its minimum.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include "h2ent/error.hpp"
#include "h2ent/measures.hpp"
#include "h2ent/numeric.hpp"
#include "h2ent/spin_model.hpp"

namespace h2ent {

enum class MeasureKind { Entropy, Concurrence };

constexpr std::string_view to_string(MeasureKind k) noexcept {
  return k == MeasureKind::Entropy ? "entropy" : "concurrence";
}

struct Window {
  double lo = 0.0;
  double hi = 1.0;

  void validate() const {
    if (!(lo >= 0.0 && lo < hi && std::isfinite(hi)))
      throw Error(ErrorCode::InvalidParams, "window must satisfy 0 <= lo < hi");
  }
};

/// |E_0| - 2 in units of B; sqrt(4 + lambda^2) - 2 for the Ising case g = 1.
inline double correlation_energy(double lambda, double g = 1.0) {
  if (!(lambda >= 0.0))
    throw Error(ErrorCode::InvalidParams, "correlation_energy: lambda must be >= 0");
  if (g == 1.0) {
    // sqrt(4 + x) - 2 = x / (sqrt(4 + x) + 2), free of cancellation near 0
    const double x = lambda * lambda;
    return x / (std::sqrt(4.0 + x) + 2.0);
  }
  return std::abs(ground_energy_closed(g, lambda)) - 2.0;
}

/// Ground-state entanglement of the model by closed form; region II gives 1
/// for both measures and lambda = 0 gives 0.
inline double ground_measure(MeasureKind kind, double g, double lambda) {
  if (lambda == 0.0) return 0.0;
  const RegionTag r = classify_region({g, lambda, 1.0});
  if (r == RegionTag::RegionII) return 1.0;
  return kind == MeasureKind::Entropy ? entropy_region_I_closed(g, lambda)
                                      : concurrence_region_I_closed(g, lambda);
}

inline constexpr double kDefaultQuadTol = 1e-12;

struct ScaleFit {
  double alpha = 0.0;
  std::size_t panels = 0;  // larger of the two quadratures
};

/// alpha minimizing int_w (target - alpha * measure)^2.
template <typename Target, typename Measure>
ScaleFit optimal_scale(Target&& target, Measure&& measure, Window w,
                       double tol = kDefaultQuadTol) {
  w.validate();
  const auto num = numeric::simpson([&](double x) { return target(x) * measure(x); }, w.lo, w.hi, tol);
  const auto den = numeric::simpson(
      [&](double x) {
        const double m = measure(x);
        return m * m;
      },
      w.lo, w.hi, tol);
  if (!(den.value > 0.0))
    throw Error(ErrorCode::ZeroMeasure, "optimal_scale: measure vanishes on the window");
  return {num.value / den.value, std::max(num.panels, den.panels)};
}

inline ScaleFit alpha_min_fit(MeasureKind kind, double g = 1.0, Window w = {},
                              double tol = kDefaultQuadTol) {
  return optimal_scale([g](double l) { return correlation_energy(l, g); },
                       [kind, g](double l) { return ground_measure(kind, g, l); }, w, tol);
}

/// Positive least-squares scale between E_corr and the chosen measure.
inline double alpha_min(MeasureKind kind, double g = 1.0, Window w = {},
                        double tol = kDefaultQuadTol) {
  return alpha_min_fit(kind, g, w, tol).alpha;
}

/// E_corr(lambda) - alpha * M(lambda)
inline double residual(MeasureKind kind, double alpha, double lambda, double g = 1.0) {
  return correlation_energy(lambda, g) - alpha * ground_measure(kind, g, lambda);
}

enum class MinimumTag {
  Interior,  // genuine local minimum inside the window
  Monotone,  // profile increases from the left edge
  Boundary,  // profile still decreasing at the right edge
};

constexpr std::string_view to_string(MinimumTag t) noexcept {
  switch (t) {
    case MinimumTag::Interior: return "interior";
    case MinimumTag::Monotone: return "monotone";
    case MinimumTag::Boundary: return "boundary";
  }
  return "?";
}

struct DeviationResult {
  double alpha_min = 0.0;
  double lambda_min = 0.0;
  double residual_at_min = 0.0;
  std::size_t integration_panels = 0;
  MinimumTag tag = MinimumTag::Interior;
};

inline constexpr std::size_t kBracketScanPoints = 64;
inline constexpr double kGoldenTol = 1e-6;

/// Locates the minimum of lambda -> residual(kind, alpha, lambda) on the
/// window: a uniform scan brackets it, golden-section search refines it.
inline DeviationResult minimize_residual(MeasureKind kind, double alpha, Window w = {},
                                         double g = 1.0) {
  w.validate();
  auto f = [&](double l) { return residual(kind, alpha, l, g); };
  const std::size_t n = kBracketScanPoints;
  const double step = (w.hi - w.lo) / static_cast<double>(n - 1);
  auto node = [&](std::size_t i) { return i + 1 == n ? w.hi : w.lo + static_cast<double>(i) * step; };

  std::size_t best = 0;
  double best_val = f(node(0));
  for (std::size_t i = 1; i < n; ++i) {
    const double v = f(node(i));
    if (v < best_val) {
      best = i;
      best_val = v;
    }
  }

  DeviationResult out;
  out.alpha_min = alpha;
  if (best == 0) {
    out.tag = MinimumTag::Monotone;
    out.lambda_min = w.lo;
    out.residual_at_min = best_val;
    return out;
  }
  if (best == n - 1) {
    out.tag = MinimumTag::Boundary;
    out.lambda_min = w.hi;
    out.residual_at_min = best_val;
    return out;
  }
  const auto m = numeric::golden_section_minimize(f, node(best - 1), node(best + 1), kGoldenTol);
  out.tag = MinimumTag::Interior;
  out.lambda_min = m.x;
  out.residual_at_min = m.value;
  return out;
}

/// alpha_min followed by the minimum of its residual profile.
inline DeviationResult analyze_deviation(MeasureKind kind, double g = 1.0, Window w = {},
                                         double tol = kDefaultQuadTol) {
  const ScaleFit fit = alpha_min_fit(kind, g, w, tol);
  DeviationResult r = minimize_residual(kind, fit.alpha, w, g);
  r.integration_panels = fit.panels;
  return r;
}

/// Mean squared deviation I[alpha] = int_w (E_corr - alpha M)^2.
inline double mean_squared_deviation(MeasureKind kind, double alpha, double g = 1.0,
                                     Window w = {}, double tol = kDefaultQuadTol) {
  w.validate();
  return numeric::integrate(
      [&](double l) {
        const double d = residual(kind, alpha, l, g);
        return d * d;
      },
      w.lo, w.hi, tol);
}

}  // namespace h2ent
