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

#include "h2ent/measures.hpp"
#include "test_support.hpp"

using namespace h2ent;
using Catch::Approx;

namespace {

// binary entropy of p = 1/2 + 1/sqrt5 = 0.947213595..., evaluated by hand
// with natural logs: 0.29830...
const double kEntropyAtOne = testing::binary_entropy_oracle(0.5 + 1.0 / std::sqrt(5.0));

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("von Neumann entropy of simple states", "[measures][entropy]") {
  CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal({1, 0}))) == 0.0);
  CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5}))) == Approx(1.0).margin(1e-15));
  const double s5 = std::sqrt(5.0);
  CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal({0.5 + 1 / s5, 0.5 - 1 / s5}))) ==
        Approx(0.2983).margin(1e-3));
  CHECK(kEntropyAtOne == Approx(0.2983).margin(1e-3));
  CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::identity(4) * 0.25)) == Approx(2.0).margin(1e-14));
}

TEST_CASE("density matrix validation", "[measures][error]") {
  CHECK(code_of([] { DensityMatrix(ComplexMatrix::diagonal({0.6, 0.6})); }) == ErrorCode::InvalidDensity);
  CHECK(code_of([] { DensityMatrix(ComplexMatrix::diagonal({1.5, -0.5})); }) == ErrorCode::InvalidDensity);
  ComplexMatrix m = ComplexMatrix::diagonal({0.5, 0.5});
  m(0, 1) = 0.1;
  CHECK(code_of([&] { DensityMatrix{m}; }) == ErrorCode::InvalidDensity);
}

TEST_CASE("region I entropy closed form", "[measures][entropy][closed]") {
  CHECK(entropy_region_I_closed(1.0, 0.0) == 0.0);
  CHECK(entropy_region_I_closed(1.0, 1e-8) < 1e-14);
  CHECK(entropy_region_I_closed(1.0, 1.0) == Approx(kEntropyAtOne).margin(1e-14));
  CHECK(entropy_region_I_closed(1.0, 100.0) == Approx(1.0).margin(1e-3));
  CHECK(code_of([] { entropy_region_I_closed(0.0, 3.0); }) == ErrorCode::WrongRegion);
  CHECK(code_of([] { entropy_region_I_closed(0.6, 2.5); }) == ErrorCode::WrongRegion);
}

TEST_CASE("region I entropy increases with coupling", "[measures][entropy][property]") {
  for (double g : {0.2, 0.5, 1.0}) {
    double prev = -1.0;
    const double top = std::min(region_boundary(g), 50.0) * 0.999;
    for (int i = 1; i <= 200; ++i) {
      const double s = entropy_region_I_closed(g, top * i / 200.0);
      CHECK(s > prev);
      prev = s;
    }
  }
}

TEST_CASE("concurrence closed form", "[measures][concurrence][closed]") {
  CHECK(concurrence_region_I_closed(1.0, 0.0) == 0.0);
  CHECK(concurrence_region_I_closed(1.0, 1.0) == Approx(1.0 / std::sqrt(5.0)).margin(1e-15));
  CHECK(concurrence_region_I_closed(1.0, 1e6) == Approx(1.0).margin(1e-10));
  CHECK(code_of([] { concurrence_region_I_closed(0.0, 3.0); }) == ErrorCode::WrongRegion);
}

TEST_CASE("Wootters concurrence of reference states", "[measures][concurrence]") {
  const auto p00 = DensityMatrix::from_state(PureState4({1, 0, 0, 0}));
  CHECK(concurrence(p00) == Approx(0.0).margin(1e-12));
  const auto bell = DensityMatrix::from_state(PureState4({0, 1, 1, 0}));
  CHECK(concurrence(bell) == Approx(1.0).margin(1e-10));
  const auto ground = DensityMatrix::from_state(ground_state_closed({1.0, 1.0, 0.5}).state);
  CHECK(concurrence(ground) == Approx(1.0 / std::sqrt(5.0)).margin(1e-6));
  CHECK(concurrence(DensityMatrix(ComplexMatrix::identity(4) * 0.25)) == Approx(0.0).margin(1e-12));
  // Werner state p|Bell><Bell| + (1-p) I/4 has C = max(0, (3p - 1)/2)
  const double p = 0.8;
  const ComplexMatrix werner = p * bell.matrix() + (1 - p) * 0.25 * ComplexMatrix::identity(4);
  CHECK(concurrence(DensityMatrix(werner)) == Approx((3 * p - 1) / 2).margin(1e-10));
  CHECK(code_of([] { concurrence(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5}))); }) ==
        ErrorCode::InvalidDensity);
}

TEST_CASE("closed forms match the diagonalization pipeline", "[measures][property]") {
  for (int i = 0; i < 30; ++i) {
    const double g = 0.2 + 0.8 * (i % 5) / 4.0;
    const double top = std::min(region_boundary(g), 6.0);
    const double l = top * (0.05 + 0.9 * (i / 5) / 5.0);
    const PureState4 psi = ground_state_numeric({g, l, 0.5}).state;
    INFO("g=" << g << " lambda=" << l);
    CHECK(std::abs(entanglement_entropy(psi) - entropy_region_I_closed(g, l)) < 1e-9);
    CHECK(std::abs(concurrence(DensityMatrix::from_state(psi)) - concurrence_region_I_closed(g, l)) < 1e-8);
  }
}

TEST_CASE("pure states obey S = h((1 + sqrt(1 - C^2)) / 2)", "[measures][property]") {
  for (int i = 0; i < 100; ++i) {
    const PureState4 psi = testing::random_pure_state();
    const double c = concurrence(DensityMatrix::from_state(psi));
    CHECK(std::abs(c - testing::pure_concurrence_oracle(psi)) < 1e-8);
    const double s = entanglement_entropy(psi);
    CHECK(std::abs(s - testing::pure_entropy_oracle(psi)) < 1e-10);
    CHECK(std::abs(s - testing::binary_entropy_oracle((1 + std::sqrt(1 - c * c)) / 2)) < 1e-8);
  }
}

TEST_CASE("concurrence is invariant under local unitaries", "[measures][property]") {
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix rho = i % 2 ? testing::random_psd(4, true) : testing::random_pure_state().projector();
    const ComplexMatrix u = kron(testing::random_unitary2(), testing::random_unitary2());
    const ComplexMatrix rotated = u * rho * u.adjoint();
    const double c0 = concurrence(DensityMatrix(rho));
    const double c1 = concurrence(DensityMatrix(0.5 * (rotated + rotated.adjoint())));
    CHECK(std::abs(c0 - c1) < 1e-8);
    CHECK(c0 >= 0.0);
    CHECK(c0 <= 1.0);
  }
}

TEST_CASE("purity report", "[measures][purity]") {
  const auto pure = purity(testing::random_pure_state().projector());
  CHECK(pure.trace_rho == Approx(1.0).margin(1e-14));
  CHECK(pure.trace_rho_sq == Approx(1.0).margin(1e-14));
  const auto mixed = purity(ComplexMatrix::diagonal({0.5, 0.5}));
  CHECK(mixed.trace_rho == 1.0);
  CHECK(mixed.trace_rho_sq == 0.5);
  const auto r = purity(ComplexMatrix::diagonal({0.9, 0.1}));
  CHECK(r.trace_rho == Approx(1.0).margin(1e-15));
  CHECK(r.trace_rho_sq == Approx(0.82).margin(1e-15));
  for (int i = 0; i < 20; ++i) {
    const auto q = purity(testing::random_psd(4, true));
    CHECK(q.trace_rho_sq >= 0.25 - 1e-12);
    CHECK(q.trace_rho_sq <= 1.0 + 1e-10);
  }
}
