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

// Random generators and independent oracles shared by the test binaries.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "h2ent/qlinalg.hpp"
#include "h2ent/spin_model.hpp"

namespace h2ent::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'2026ULL);
  return engine;
}

inline Complex gaussian_complex() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

inline ComplexMatrix random_matrix(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = gaussian_complex();
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim) {
  const ComplexMatrix a = random_matrix(dim);
  return 0.5 * (a + a.adjoint());
}

/// Wishart-type PSD matrix A A^H with unit trace when `normalize`.
inline ComplexMatrix random_psd(std::size_t dim, bool normalize = false, std::size_t rank = 0) {
  ComplexMatrix a = random_matrix(dim);
  if (rank != 0)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = rank; j < dim; ++j) a(i, j) = 0.0;
  ComplexMatrix m = a * a.adjoint();
  if (normalize) m *= 1.0 / m.trace().real();
  return m;
}

inline PureState4 random_pure_state() {
  return PureState4({gaussian_complex(), gaussian_complex(), gaussian_complex(), gaussian_complex()});
}

/// Haar-ish random 2x2 unitary from the QR of a Gaussian matrix.
inline ComplexMatrix random_unitary2() {
  Complex a = gaussian_complex(), b = gaussian_complex();
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  const Complex phase = std::polar(1.0, std::uniform_real_distribution<double>(0, 6.283185307179586)(rng()));
  return {{a, -phase * std::conj(b)}, {b, phase * std::conj(a)}};
}

inline double binary_entropy_oracle(double p) {
  double s = 0.0;
  if (p > 0) s -= p * std::log(p) / std::log(2.0);
  if (p < 1) s -= (1 - p) * std::log(1 - p) / std::log(2.0);
  return s;
}

/// Concurrence of a pure two-qubit state, 2 |a00 a11 - a01 a10|.
inline double pure_concurrence_oracle(const PureState4& psi) {
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

/// Reduced-state entropy of a pure state from the Schmidt coefficients of
/// the 2x2 amplitude matrix (closed-form 2x2 eigenvalues).
inline double pure_entropy_oracle(const PureState4& psi) {
  const double p00 = std::norm(psi[0]) + std::norm(psi[1]);
  const double p11 = std::norm(psi[2]) + std::norm(psi[3]);
  const Complex off = psi[0] * std::conj(psi[2]) + psi[1] * std::conj(psi[3]);
  const double mean = 0.5 * (p00 + p11);
  const double rad = std::sqrt(0.25 * (p00 - p11) * (p00 - p11) + std::norm(off));
  return binary_entropy_oracle(mean + rad);
}

}  // namespace h2ent::testing
