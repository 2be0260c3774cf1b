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

/// \file spin_model.hpp
/// Two-qubit anisotropic XY model in a longitudinal field,
///
///   H / B = -(lambda/2)(1+g) s1 (x) s1 - (lambda/2)(1-g) s2 (x) s2
///           - (s3 (x) s0 + s0 (x) s3),
///
/// with lambda = J/B. The spectrum splits into the {|00>,|11>} block with
/// ground energy -sqrt(4 + g^2 lambda^2) (region I) and the {|01>,|10>}
/// block with ground energy -lambda (region II).

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "h2ent/error.hpp"
#include "h2ent/qlinalg.hpp"

namespace h2ent {

struct ModelParams {
  double g = 1.0;        // anisotropy in [0, 1]; 1 is the Ising limit
  double lambda = 0.0;   // J / B
  double b_field = 0.5;  // Ry, only needed for physical units

  void validate() const {
    if (!(g >= 0.0 && g <= 1.0))
      throw Error(ErrorCode::InvalidParams, "anisotropy g must lie in [0, 1]");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
      throw Error(ErrorCode::InvalidParams, "coupling lambda must be finite and >= 0");
    if (!(b_field > 0.0))
      throw Error(ErrorCode::InvalidParams, "field B must be > 0");
  }
};

enum class RegionTag { RegionI, RegionII, Boundary };

constexpr std::string_view to_string(RegionTag r) noexcept {
  switch (r) {
    case RegionTag::RegionI: return "I";
    case RegionTag::RegionII: return "II";
    case RegionTag::Boundary: return "boundary";
  }
  return "?";
}

/// Normalized 4-amplitude state in the |00>,|01>,|10>,|11> basis.
class PureState4 {
 public:
  PureState4() = default;

  /// Normalizes the given amplitudes; throws on a zero vector.
  explicit PureState4(const std::array<Complex, 4>& amplitudes) : amp_(amplitudes) {
    double n = 0.0;
    for (const auto& a : amp_) n += std::norm(a);
    if (!(n > 0.0)) throw Error(ErrorCode::InvalidParams, "PureState4: zero vector");
    const double inv = 1.0 / std::sqrt(n);
    for (auto& a : amp_) a *= inv;
  }

  const std::array<Complex, 4>& amplitudes() const noexcept { return amp_; }
  const Complex& operator[](std::size_t i) const { return amp_[i]; }

  ComplexMatrix projector() const { return ComplexMatrix::projector(amp_); }

  /// |<this|other>|
  double overlap(const PureState4& other) const {
    Complex s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::conj(amp_[i]) * other.amp_[i];
    return std::abs(s);
  }

 private:
  std::array<Complex, 4> amp_{1.0, 0.0, 0.0, 0.0};
};

/// Upper edge of region I, 2/sqrt(1-g^2); +inf for g = 1.
inline double region_boundary(double g) {
  const double d = 1.0 - g * g;
  if (d <= 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 / std::sqrt(d);
}

inline constexpr double kBoundaryTol = 1e-12;

inline RegionTag classify_region(const ModelParams& p) {
  p.validate();
  if (p.lambda == 0.0)
    throw Error(ErrorCode::LambdaZero, "lambda = 0 describes the uncoupled product state");
  const double bound = region_boundary(p.g);
  if (std::isinf(bound)) return RegionTag::RegionI;
  if (std::abs(p.lambda - bound) <= kBoundaryTol) return RegionTag::Boundary;
  return p.lambda < bound ? RegionTag::RegionI : RegionTag::RegionII;
}

/// Hamiltonian in units of B, assembled from Pauli tensor products.
inline ComplexMatrix build_hamiltonian(const ModelParams& p) {
  p.validate();
  using namespace pauli;
  const double jx = 0.5 * p.lambda * (1.0 + p.g);
  const double jy = 0.5 * p.lambda * (1.0 - p.g);
  ComplexMatrix h = (-jx) * kron(sigma1(), sigma1());
  h -= jy * kron(sigma2(), sigma2());
  h -= kron(sigma3(), sigma0()) + kron(sigma0(), sigma3());
  return h;
}

struct GroundState {
  double energy = 0.0;
  PureState4 state;
  RegionTag region = RegionTag::RegionI;
};

/// Closed-form ground energy only; valid for every lambda >= 0.
inline double ground_energy_closed(double g, double lambda) {
  const double e1 = -std::sqrt(4.0 + g * g * lambda * lambda);
  const double e2 = -lambda;
  return std::min(e1, e2);
}

/// Closed-form ground state. At the region boundary the two levels are
/// degenerate; the region-I state is returned with a Boundary tag.
inline GroundState ground_state_closed(const ModelParams& p) {
  const RegionTag region = classify_region(p);
  const double gl = p.g * p.lambda;
  if (region == RegionTag::RegionII) {
    return {-p.lambda, PureState4({0.0, 1.0, 1.0, 0.0}), region};
  }
  const double root = std::sqrt(gl * gl + 4.0);
  if (gl == 0.0) {
    // removable singularity of (root + 2)/(g lambda): the state tends to |00>
    return {-2.0, PureState4({1.0, 0.0, 0.0, 0.0}), region};
  }
  return {-root, PureState4({(root + 2.0) / gl, 0.0, 0.0, 1.0}), region};
}

/// Numerical ground state from diagonalizing the full Hamiltonian.
inline GroundState ground_state_numeric(const ModelParams& p) {
  const EigenDecomposition ed = eigh(build_hamiltonian(p));
  const auto v = ed.vector(0);
  return {ed.eigenvalues[0], PureState4({v[0], v[1], v[2], v[3]}),
          p.lambda == 0.0 ? RegionTag::RegionI : classify_region(p)};
}

}  // namespace h2ent
