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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "h2ent/qlinalg.hpp"
#include "h2ent/spin_model.hpp"
#include "test_support.hpp"

using namespace h2ent;
using Catch::Approx;

TEST_CASE("kron of Pauli matrices", "[qlinalg][kron]") {
  using namespace pauli;
  CHECK(kron(sigma0(), sigma0()) == ComplexMatrix::identity(4));
  CHECK(kron(sigma3(), sigma3()) == ComplexMatrix::diagonal({1, -1, -1, 1}));

  const ComplexMatrix xx = kron(sigma1(), sigma1());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(xx(i, j) == Complex(i + j == 3 ? 1.0 : 0.0));
}

TEST_CASE("kron index layout and associativity", "[qlinalg][kron][property]") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_matrix(2);
    const auto b = testing::random_matrix(2);
    const auto c = testing::random_matrix(2);
    const auto ab = kron(a, b);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          for (std::size_t l = 0; l < 2; ++l) CHECK(ab(i * 2 + k, j * 2 + l) == a(i, j) * b(k, l));
    CHECK(kron(ab, c).max_abs_diff(kron(a, kron(b, c))) < 1e-12);
    const auto d4 = testing::random_matrix(4);
    CHECK(kron(kron(a, d4), b).max_abs_diff(kron(a, kron(d4, b))) < 1e-12);
  }
}

TEST_CASE("eigh on simple spectra", "[qlinalg][eigh]") {
  const auto d = eigh(ComplexMatrix::diagonal({2, 0, -2, 0}));
  REQUIRE(d.eigenvalues.size() == 4);
  CHECK(d.eigenvalues[0] == Approx(-2).margin(1e-14));
  CHECK(d.eigenvalues[1] == Approx(0).margin(1e-14));
  CHECK(d.eigenvalues[2] == Approx(0).margin(1e-14));
  CHECK(d.eigenvalues[3] == Approx(2).margin(1e-14));

  const auto x = eigh(pauli::sigma1());
  CHECK(x.eigenvalues[0] == Approx(-1).margin(1e-14));
  CHECK(x.eigenvalues[1] == Approx(1).margin(1e-14));

  const auto y = eigh(pauli::sigma2());
  CHECK(y.eigenvalues[0] == Approx(-1).margin(1e-14));
  CHECK(y.eigenvalues[1] == Approx(1).margin(1e-14));

  const auto h = eigh(build_hamiltonian({1.0, 1.0, 0.5}));
  CHECK(h.eigenvalues[0] == Approx(-std::sqrt(5.0)).margin(1e-12));
}

TEST_CASE("eigh rejects non-Hermitian input", "[qlinalg][eigh][error]") {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 1.0;
  try {
    eigh(m);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
}

TEST_CASE("eigh decomposition invariants on random Hermitian matrices", "[qlinalg][eigh][property]") {
  for (std::size_t dim : {2u, 3u, 4u, 6u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix m = testing::random_hermitian(dim);
      const EigenDecomposition ed = eigh(m);
      const ComplexMatrix& v = ed.eigenvectors;
      CHECK(std::is_sorted(ed.eigenvalues.begin(), ed.eigenvalues.end()));
      CHECK((v.adjoint() * v).max_abs_diff(ComplexMatrix::identity(dim)) < 1e-10);
      CHECK((m * v).max_abs_diff(v * ComplexMatrix::diagonal(ed.eigenvalues)) < 1e-10);
      CHECK(spectral_apply(ed, [](double e) { return e; }).max_abs_diff(m) < 1e-9);
    }
  }
}

TEST_CASE("mat_sqrt", "[qlinalg][sqrt]") {
  CHECK(mat_sqrt(ComplexMatrix::identity(4)).max_abs_diff(ComplexMatrix::identity(4)) < 1e-14);
  CHECK(mat_sqrt(ComplexMatrix::diagonal({4, 1, 0, 0})).max_abs_diff(ComplexMatrix::diagonal({2, 1, 0, 0})) <
        1e-14);

  SECTION("projectors are their own square root") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = testing::random_pure_state().projector();
      CHECK(mat_sqrt(p).max_abs_diff(p) < 1e-10);
    }
  }

  SECTION("squares back on random PSD matrices") {
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix m = testing::random_psd(4, false, 1 + trial % 4);
      const ComplexMatrix s = mat_sqrt(m);
      CHECK((s * s).max_abs_diff(m) < 1e-8);
      CHECK(s.is_hermitian(1e-12));
      CHECK(eigh(s).eigenvalues.front() > -1e-10);
    }
  }

  SECTION("small negative drift is clamped, genuine negatives rejected") {
    CHECK(mat_sqrt(ComplexMatrix::diagonal({1, -1e-9})).max_abs_diff(ComplexMatrix::diagonal({1, 0})) < 1e-14);
    try {
      mat_sqrt(ComplexMatrix::diagonal({1, -1e-6}));
      FAIL("expected NotPSD");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPSD);
    }
  }
}

TEST_CASE("partial_trace_second", "[qlinalg][ptrace]") {
  const ComplexMatrix p00 = ComplexMatrix::projector(std::vector<Complex>{1, 0, 0, 0});
  CHECK(partial_trace_second(p00).max_abs_diff(ComplexMatrix::diagonal({1, 0})) < 1e-15);

  const ComplexMatrix bell = PureState4({0, 1, 1, 0}).projector();
  CHECK(partial_trace_second(bell).max_abs_diff(ComplexMatrix::diagonal({0.5, 0.5})) < 1e-15);

  // ground state at g = lambda = 1 is proportional to (sqrt5 + 2, 0, 0, 1)
  const double s5 = std::sqrt(5.0);
  const ComplexMatrix ground = PureState4({s5 + 2.0, 0, 0, 1}).projector();
  CHECK(partial_trace_second(ground).max_abs_diff(ComplexMatrix::diagonal({0.5 + 1 / s5, 0.5 - 1 / s5})) <
        1e-14);

  ComplexMatrix bad = ComplexMatrix::identity(4);
  try {
    partial_trace_second(bad);
    FAIL("expected BadTrace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadTrace);
  }
}

TEST_CASE("partial trace preserves positivity and trace", "[qlinalg][ptrace][property]") {
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix rho = testing::random_psd(4, true, 1 + trial % 4);
    const ComplexMatrix r = partial_trace_second(rho);
    CHECK(r.is_hermitian(1e-12));
    CHECK(std::abs(r.trace() - 1.0) < 1e-12);
    CHECK(eigh(r).eigenvalues.front() > -1e-10);
  }
}
