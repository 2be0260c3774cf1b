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

/// \file qlinalg.hpp
/// Dense complex linear algebra for the tiny matrices of two-qubit physics:
/// Hermitian eigendecomposition (cyclic Jacobi), Kronecker products, the
/// PSD square root and the partial trace over the second qubit.
///
/// Basis ordering is |00>, |01>, |10>, |11> with the first qubit as the
/// slowest index.

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "h2ent/error.hpp"

namespace h2ent {

using Complex = std::complex<double>;

/// Square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : dim_(rows.size()), data_(rows.size() * rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      assert(row.size() == dim_);
      std::copy(row.begin(), row.end(), data_.begin() + i * dim_);
      ++i;
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  /// |v><v|
  static ComplexMatrix projector(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  /// Entry-wise complex conjugate in the computational basis.
  ComplexMatrix conjugate() const {
    ComplexMatrix r(dim_);
    std::transform(data_.begin(), data_.end(), r.data_.begin(),
                   [](const Complex& z) { return std::conj(z); });
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs_diff(const ComplexMatrix& other) const {
    assert(other.dim_ == dim_);
    double d = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
      d = std::max(d, std::abs(data_[k] - other.data_[k]));
    return d;
  }

  bool is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    assert(o.dim_ == dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    assert(o.dim_ == dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.dim_ == b.dim_);
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

inline std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  assert(m.dim() == v.size());
  std::vector<Complex> r(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

namespace pauli {

inline ComplexMatrix sigma0() { return ComplexMatrix::identity(2); }
inline ComplexMatrix sigma1() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix sigma2() {
  using namespace std::complex_literals;
  return {{0.0, -1i}, {1i, 0.0}};
}
inline ComplexMatrix sigma3() { return {{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace pauli

/// Kronecker product; (a (x) b)[i*nb+k][j*nb+l] = a[i][j] * b[k][l].
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order

  std::vector<Complex> vector(std::size_t k) const {
    const std::size_t n = eigenvectors.dim();
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = eigenvectors(i, k);
    return v;
  }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

inline constexpr double kHermitianTol = 1e-10;

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Each rotation is U = D * G where D = diag(1, e^{-i phi}) on (p, q) makes
/// the pivot real and G is the classical real Jacobi rotation. Sweeps stop
/// once the off-diagonal Frobenius norm drops below 1e-14 (scaled by the
/// matrix norm when it exceeds one).
inline EigenDecomposition eigh(const ComplexMatrix& m) {
  if (!m.is_hermitian(kHermitianTol))
    throw Error(ErrorCode::NotHermitian, "eigh: matrix is not Hermitian within 1e-10");

  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double threshold = 1e-14 * std::max(1.0, m.frobenius_norm());
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) < threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex u_pp = c, u_pq = s;
        const Complex u_qp = -s * std::conj(phase), u_qq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^H A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V U
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// V * diag(f(lambda)) * V^H for a decomposition V diag(lambda) V^H.
template <typename F>
ComplexMatrix spectral_apply(const EigenDecomposition& ed, F&& f) {
  const std::size_t n = ed.eigenvectors.dim();
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(ed.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) += fk * ed.eigenvectors(i, k) * std::conj(ed.eigenvectors(j, k));
  }
  return r;
}

inline constexpr double kPsdTol = 1e-8;
// Eigenvalues whose magnitude is below this fraction of the spectral radius
// are rounding noise and are zeroed before the square root.
inline constexpr double kSpectralFloor = 1e-14;

/// Principal square root of a Hermitian positive semidefinite matrix.
inline ComplexMatrix mat_sqrt(const ComplexMatrix& m) {
  const EigenDecomposition ed = eigh(m);
  double radius = 0.0;
  for (double e : ed.eigenvalues) radius = std::max(radius, std::abs(e));
  for (double e : ed.eigenvalues)
    if (e < -kPsdTol)
      throw Error(ErrorCode::NotPSD,
                  "mat_sqrt: eigenvalue " + std::to_string(e) + " below -1e-8");
  const double floor = kSpectralFloor * std::max(1.0, radius);
  return spectral_apply(ed, [floor](double e) { return e <= floor ? 0.0 : std::sqrt(e); });
}

/// Trace over the second qubit of a 4x4 operator:
/// out[i][j] = sum_k rho[2i+k][2j+k].
inline ComplexMatrix partial_trace_second(const ComplexMatrix& rho) {
  if (rho.dim() != 4)
    throw Error(ErrorCode::InvalidDensity, "partial_trace_second: expected a 4x4 matrix");
  if (std::abs(rho.trace() - 1.0) > kPsdTol)
    throw Error(ErrorCode::BadTrace, "partial_trace_second: trace differs from 1 by more than 1e-8");
  ComplexMatrix r(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r(i, j) += rho(2 * i + k, 2 * j + k);
  return r;
}

}  // namespace h2ent
