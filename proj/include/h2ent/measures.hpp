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

/// \file measures.hpp
/// Entanglement and mixing measures: von Neumann entropy (bits), Wootters
/// concurrence, their region-I closed forms, and trace purity.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "h2ent/error.hpp"
#include "h2ent/qlinalg.hpp"
#include "h2ent/spin_model.hpp"

namespace h2ent {

inline constexpr double kDensityTol = 1e-10;

/// Validated density matrix: Hermitian, unit trace, PSD (all within 1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (!mat_.is_hermitian(kDensityTol))
      throw Error(ErrorCode::InvalidDensity, "density matrix is not Hermitian");
    if (std::abs(mat_.trace() - 1.0) > kDensityTol)
      throw Error(ErrorCode::InvalidDensity, "density matrix trace differs from 1");
    spectrum_ = eigh(mat_).eigenvalues;
    if (spectrum_.front() < -kDensityTol)
      throw Error(ErrorCode::InvalidDensity,
                  "density matrix has negative eigenvalue " + std::to_string(spectrum_.front()));
  }

  static DensityMatrix from_state(const PureState4& psi) { return DensityMatrix(psi.projector()); }

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }
  /// Ascending eigenvalues.
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }

 private:
  ComplexMatrix mat_;
  std::vector<double> spectrum_;
};

/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
inline double binary_entropy(double p) {
  double s = 0.0;
  for (double x : {p, 1.0 - p})
    if (x > 0.0) s -= x * std::log2(x);
  return s;
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double p : rho.spectrum())
    if (p > 0.0) s -= p * std::log2(p);
  return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())));
}

/// Entropy of the one-qubit reduced state of a two-qubit pure state.
inline double entanglement_entropy(const PureState4& psi) {
  return von_neumann_entropy(DensityMatrix(partial_trace_second(psi.projector())));
}

namespace detail {

inline void require_region_one(double g, double lambda, const char* who) {
  if (lambda == 0.0) return;  // product-state limit, both measures vanish
  const RegionTag r = classify_region({g, lambda, 1.0});
  if (r != RegionTag::RegionI)
    throw Error(ErrorCode::WrongRegion,
                std::string(who) + ": (g, lambda) is not inside region I");
}

}  // namespace detail

/// Region-I entropy: binary entropy of the reduced populations
/// 1/2 +- 1/sqrt(g^2 lambda^2 + 4).
inline double entropy_region_I_closed(double g, double lambda) {
  detail::require_region_one(g, lambda, "entropy_region_I_closed");
  const double gl = g * lambda;
  if (gl == 0.0) return 0.0;
  // 1/2 - 1/sqrt(x+4) = x / (2 sqrt(x+4) (sqrt(x+4) + 2)), written without
  // cancellation so that tiny couplings keep full relative accuracy.
  const double x = gl * gl;
  const double root = std::sqrt(x + 4.0);
  const double p_minus = x / (2.0 * root * (root + 2.0));
  return binary_entropy(p_minus);
}

/// Region-I concurrence g lambda / sqrt(g^2 lambda^2 + 4).
inline double concurrence_region_I_closed(double g, double lambda) {
  detail::require_region_one(g, lambda, "concurrence_region_I_closed");
  const double gl = g * lambda;
  return gl / std::sqrt(gl * gl + 4.0);
}

/// sigma_y (x) sigma_y
inline ComplexMatrix spin_flip_operator() { return kron(pauli::sigma2(), pauli::sigma2()); }

/// Wootters concurrence max(0, nu1 - nu2 - nu3 - nu4), nu the descending
/// eigenvalues of R = (sqrt(rho) rho~ sqrt(rho))^{1/2} with
/// rho~ = (sy (x) sy) rho* (sy (x) sy).
inline double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw Error(ErrorCode::InvalidDensity, "concurrence needs a two-qubit (4x4) density matrix");
  const ComplexMatrix yy = spin_flip_operator();
  const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
  const ComplexMatrix sqrt_rho = mat_sqrt(rho.matrix());
  ComplexMatrix inner = sqrt_rho * flipped * sqrt_rho;
  inner = 0.5 * (inner + inner.adjoint());  // symmetrize rounding
  const ComplexMatrix r = mat_sqrt(inner);
  std::vector<double> nu = eigh(r).eigenvalues;
  for (double& x : nu) x = std::max(x, 0.0);
  std::sort(nu.begin(), nu.end(), std::greater<>());
  return std::clamp(nu[0] - nu[1] - nu[2] - nu[3], 0.0, 1.0);
}

struct PurityReport {
  double trace_rho = 0.0;
  double trace_rho_sq = 0.0;
};

/// (Tr rho, Tr rho^2); only Hermiticity is assumed.
inline PurityReport purity(const ComplexMatrix& rho) {
  if (!rho.is_hermitian(kDensityTol))
    throw Error(ErrorCode::InvalidDensity, "purity: matrix is not Hermitian");
  double sq = 0.0;
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho
  for (const auto& z : rho.entries()) sq += std::norm(z);
  return {rho.trace().real(), sq};
}

inline PurityReport purity(const DensityMatrix& rho) { return purity(rho.matrix()); }

}  // namespace h2ent
