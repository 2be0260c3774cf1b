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

/// \file hydrogen.hpp
/// Distance-dependent exchange coupling J(r) = A r^p e^{-d r} (Ry, r in Bohr
/// radii), the map r -> lambda = J(r)/B, and equilibrium lengths read off
/// the residual minimum pulled back through J.

#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <string_view>
#include <vector>

#include "h2ent/deviation.hpp"
#include "h2ent/error.hpp"
#include "h2ent/numeric.hpp"
#include "h2ent/table.hpp"

namespace h2ent {

struct CouplingModel {
  double amplitude = 1.641;  // Ry
  double power = 2.5;
  double decay = 2.0;  // per Bohr radius

  double operator()(double r) const {
    if (r < 0.0) throw Error(ErrorCode::NegativeDistance, "J(r): distance must be >= 0");
    if (r == 0.0) return 0.0;
    return amplitude * std::pow(r, power) * std::exp(-decay * r);
  }

  /// Stationary point power / decay.
  double r_max() const { return power / decay; }
};

inline double j_of_r(double r) { return CouplingModel{}(r); }

struct JMax {
  double r_max = 0.0;
  double j_max = 0.0;
};

inline JMax j_max_location(const CouplingModel& model = {}) {
  const double r = model.r_max();
  return {r, model(r)};
}

/// Golden-section maximization of J, independent of the analytic r_max.
inline JMax j_max_location_numeric(const CouplingModel& model = {}, double tol = 1e-10) {
  const auto m = numeric::golden_section_minimize([&](double r) { return -model(r); }, 0.0,
                                                  10.0, tol);
  return {m.x, -m.value};
}

inline constexpr double kRootTol = 1e-10;
inline constexpr double kRootFloor = 0.01;   // Bohr
inline constexpr double kRootCeiling = 10.0;  // Bohr; J < 1e-6 Ry beyond
inline constexpr double kExperimentalLength = 2.0;

enum class EquilibriumKind { TwoMinima, SingleAtJMax, None };

constexpr std::string_view to_string(EquilibriumKind k) noexcept {
  switch (k) {
    case EquilibriumKind::TwoMinima: return "two_minima";
    case EquilibriumKind::SingleAtJMax: return "single_at_jmax";
    case EquilibriumKind::None: return "none";
  }
  return "?";
}

struct EquilibriumScan {
  double b_field = 0.0;
  double target_lambda = 0.0;
  std::vector<double> roots;  // Bohr radii, ascending
  EquilibriumKind kind = EquilibriumKind::None;
};

/// Distances where J(r)/B hits `target_lambda`. If the target exceeds the
/// peak coupling, the residual is minimized at the peak itself.
inline EquilibriumScan equilibrium_lengths_for_target(double target_lambda, double b_field,
                                                      const CouplingModel& model = {}) {
  if (!(b_field > 0.0)) throw Error(ErrorCode::InvalidParams, "B must be > 0");
  EquilibriumScan scan{b_field, target_lambda, {}, EquilibriumKind::None};
  if (!(target_lambda > 0.0)) return scan;
  const JMax peak = j_max_location(model);
  const double target_j = target_lambda * b_field;
  if (target_j > peak.j_max) {
    scan.kind = EquilibriumKind::SingleAtJMax;
    scan.roots = {peak.r_max};
    return scan;
  }
  auto f = [&](double r) { return model(r) - target_j; };
  scan.roots = {numeric::bisect(f, kRootFloor, peak.r_max, kRootTol),
                numeric::bisect(f, peak.r_max, kRootCeiling, kRootTol)};
  scan.kind = EquilibriumKind::TwoMinima;
  return scan;
}

/// Equilibrium lengths for the default coupling window [0, 1] at g = 1.
inline EquilibriumScan equilibrium_lengths(MeasureKind kind, double b_field, double g = 1.0,
                                           Window w = {}, const CouplingModel& model = {}) {
  const DeviationResult dev = analyze_deviation(kind, g, w);
  if (dev.tag != MinimumTag::Interior) return {b_field, dev.lambda_min, {}, EquilibriumKind::None};
  return equilibrium_lengths_for_target(dev.lambda_min, b_field, model);
}

/// Root closest to the experimental bond length, or NaN when there is none.
inline double nearest_to_experiment(const EquilibriumScan& scan) {
  double best = std::nan("");
  for (double r : scan.roots)
    if (std::isnan(best) || std::abs(r - kExperimentalLength) < std::abs(best - kExperimentalLength))
      best = r;
  return best;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

/// values(i, j) = residual at r_values[i], b_values[j].
struct ContourGrid {
  std::vector<double> b_values;
  std::vector<double> r_values;
  std::vector<double> values;  // row-major, one row per r

  double operator()(std::size_t ir, std::size_t jb) const { return values[ir * b_values.size() + jb]; }
  double& operator()(std::size_t ir, std::size_t jb) { return values[ir * b_values.size() + jb]; }

  std::vector<double> column(std::size_t jb) const {
    std::vector<double> c(r_values.size());
    for (std::size_t i = 0; i < r_values.size(); ++i) c[i] = (*this)(i, jb);
    return c;
  }
};

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) v.back() = hi;
  return v;
}

/// Concurrence residual Delta(J(r)/B) over a (B, r) lattice. Cells are
/// independent pure evaluations.
inline ContourGrid contour_grid(Range b_range, Range r_range, std::size_t nb, std::size_t nr,
                                MeasureKind kind = MeasureKind::Concurrence, double g = 1.0,
                                Window w = {}, const CouplingModel& model = {}) {
  if (nb < 2 || nr < 2) throw Error(ErrorCode::InvalidParams, "contour grid needs nb, nr >= 2");
  if (!(b_range.lo > 0.0 && b_range.lo < b_range.hi && r_range.lo >= 0.0 && r_range.lo < r_range.hi))
    throw Error(ErrorCode::InvalidParams, "contour ranges must be positive and increasing");
  ContourGrid grid{linspace(b_range.lo, b_range.hi, nb), linspace(r_range.lo, r_range.hi, nr),
                   std::vector<double>(nb * nr)};
  // alpha depends only on the lambda window, so one fit serves every column
  const double alpha = alpha_min(kind, g, w);
  for (std::size_t i = 0; i < nr; ++i) {
    const double j = model(grid.r_values[i]);
    for (std::size_t k = 0; k < nb; ++k) grid(i, k) = residual(kind, alpha, j / grid.b_values[k], g);
  }
  return grid;
}

/// Grid CSV: a `r\B` header row of B values, then one row per r.
inline void write_grid_csv(std::ostream& os, const ContourGrid& grid) {
  os << "r\\B";
  for (double b : grid.b_values) os << ',' << format_number(b);
  os << '\n';
  for (std::size_t i = 0; i < grid.r_values.size(); ++i) {
    os << format_number(grid.r_values[i]);
    for (std::size_t j = 0; j < grid.b_values.size(); ++j) os << ',' << format_number(grid(i, j));
    os << '\n';
  }
}

/// Number of strict interior local minima of a sampled profile.
inline std::size_t count_local_minima(const std::vector<double>& v) {
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i] < v[i - 1] && v[i] <= v[i + 1]) ++count;
  return count;
}

}  // namespace h2ent
