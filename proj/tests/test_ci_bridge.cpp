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
#include <numbers>
#include <sstream>

#include "h2ent/ci_bridge.hpp"
#include "h2ent/measures.hpp"
#include "test_support.hpp"

using namespace h2ent;
using Catch::Approx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::UsageError;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

SampleSeries parse(const std::string& text) {
  std::istringstream in(text);
  return parse_series(in, "mem");
}

SampleSeries series_from(std::vector<double> r, std::vector<double> e, std::vector<double> s) {
  std::vector<Sample> rows;
  for (std::size_t i = 0; i < r.size(); ++i) rows.push_back({r[i], e[i], s[i], {}, {}});
  return make_series(rows);
}

}  // namespace

TEST_CASE("CISD entropy", "[ci_bridge][cisd]") {
  CHECK(cisd_entropy({1.0, {}, {}, {}}) == 0.0);
  const double h = std::sqrt(0.5);
  CHECK(cisd_entropy({h, {h}, {}, {}}) == Approx(1.0).margin(1e-15));

  // c0 = 0.98, one paired double 0.1, mixed double fixed by normalization
  const double p = 1.0 - 0.98 * 0.98 - 0.01;
  const double s = cisd_entropy({0.98, {}, {std::sqrt(p)}, {0.1}});
  CHECK(s == Approx(testing::binary_entropy_oracle(p)).margin(1e-14));
  CHECK(testing::binary_entropy_oracle(0.031) == Approx(0.199).margin(1e-3));

  CHECK(code_of([] { cisd_entropy({0.9, {0.1}, {}, {}}); }) == ErrorCode::NotNormalized);
}

TEST_CASE("CISD entropy depends only on class weights", "[ci_bridge][cisd][property]") {
  const CisdCoefficients a{0.9, {0.1, 0.2, 0.05}, {0.15, 0.1}, {0.3, std::sqrt(1 - 0.81 - 0.0525 - 0.0325 - 0.09)}};
  CisdCoefficients b = a;
  std::reverse(b.singles.begin(), b.singles.end());
  std::reverse(b.doubles_mixed.begin(), b.doubles_mixed.end());
  std::reverse(b.doubles_paired.begin(), b.doubles_paired.end());
  CHECK(cisd_entropy(a) == cisd_entropy(b));
  // moving weight between singles and mixed doubles keeps p
  CisdCoefficients c = a;
  c.singles = {std::sqrt(0.01 + 0.04 + 0.0025 + 0.0225 + 0.01)};
  c.doubles_mixed = {};
  CHECK(cisd_entropy(a) == Approx(cisd_entropy(c)).margin(1e-15));
}

TEST_CASE("entropy as a function of correlation energy", "[ci_bridge][s_of_ecorr]") {
  CHECK(s_of_ecorr(1e-12) < 1e-9);
  CHECK(s_of_ecorr(std::sqrt(5.0) - 2) == Approx(0.2983).margin(1e-3));
  CHECK(std::abs(s_of_ecorr(2 * std::sqrt(3.0) - 2) - entropy_region_I_closed(1.0, 2 * std::sqrt(2.0))) < 1e-10);
  CHECK(code_of([] { s_of_ecorr(0.0); }) == ErrorCode::NonPositive);
  CHECK(code_of([] { s_of_ecorr(-1.0); }) == ErrorCode::NonPositive);
  CHECK(lambda_of_ecorr(correlation_energy(1.7)) == Approx(1.7).margin(1e-13));
}

TEST_CASE("substitution identity", "[ci_bridge][property]") {
  for (int i = 1; i <= 50; ++i) {
    const double l = 3.0 * i / 50.0;
    INFO("lambda=" << l);
    CHECK(std::abs(s_of_ecorr(correlation_energy(l)) - entropy_region_I_closed(1.0, l)) < 1e-10);
  }
}

TEST_CASE("small-E expansion coefficients", "[ci_bridge][expansion]") {
  const auto fit = expansion_coefficients();
  const double ln2 = std::numbers::ln2;
  CHECK(fit.b == Approx(-1.0 / (4 * ln2)).margin(1e-3));
  CHECK(fit.b == Approx(-0.36067).margin(1e-3));
  // leading coefficient from the series expansion, 1/2 + 1/(4 ln 2)
  CHECK(fit.a == Approx(expansion_coefficients_analytic().a).margin(2e-2));
  CHECK(std::abs(fit.a - printed::kA) > 0.1);
  CHECK(std::abs(fit.a - printed::kLinearSlope) > 0.1);
}

TEST_CASE("log-linear fit is exact on its own model class", "[ci_bridge][fit][property]") {
  std::vector<double> e, y;
  for (int i = 0; i < 40; ++i) {
    const double x = 1e-4 * std::pow(100.0, i / 39.0);
    e.push_back(x);
    y.push_back(0.5 * x - 0.36 * x * std::log(x));
  }
  for (bool rel : {false, true}) {
    const auto f = fit_log_linear(e, y, rel);
    CHECK(f.a_coef == Approx(0.5).margin(1e-10));
    CHECK(f.b_coef == Approx(-0.36).margin(1e-10));
    CHECK(f.rss < 1e-20);
  }
  const auto two = fit_log_linear(std::vector<double>{0.01, 0.02}, std::vector<double>{s_of_ecorr(0.01), s_of_ecorr(0.02)});
  CHECK(two.rss < 1e-12);
  CHECK(code_of([] { fit_log_linear(std::vector<double>{0.1, 0.1}, std::vector<double>{0.2, 0.3}); }) ==
        ErrorCode::SingularBasis);
  CHECK(code_of([] { fit_log_linear(std::vector<double>{0.1, -0.1}, std::vector<double>{0.2, 0.3}); }) ==
        ErrorCode::NonPositive);
  CHECK(code_of([] { fit_log_linear(std::vector<double>{0.1}, std::vector<double>{0.2}); }) ==
        ErrorCode::TooFewSamples);
}

TEST_CASE("fit sign for model and concave data", "[ci_bridge][fit]") {
  std::vector<Sample> model, concave;
  for (int i = 0; i < 20; ++i) {
    const double x = 1e-4 * std::pow(100.0, i / 19.0);
    model.push_back({1.0 + i, x, s_of_ecorr(x), {}, {}});
    concave.push_back({1.0 + i, x, 3.0 * x + 0.3 * x * std::log(x), {}, {}});
  }
  CHECK(fit_log_linear(make_series(model)).b_coef < 0.0);
  const auto c = fit_log_linear(make_series(concave));
  CHECK(c.b_coef > 0.0);
  CHECK(c.b_coef == Approx(0.3).margin(1e-10));
}

TEST_CASE("series parsing", "[ci_bridge][parse]") {
  const auto s = parse("# comment\nR_angstrom,E_corr,S_vN\n0.9,0.02,0.10\n0.7,0.01,0.05\n\n1.1,0.03,0.2\n");
  REQUIRE(s.size() == 3);
  CHECK(s.rows[0].r == 0.7);
  CHECK(s.rows[2].entropy == 0.2);
  CHECK(!s.has_purity());

  const auto p = parse("\xEF\xBB\xBFR_angstrom,E_corr,S_vN,Tr_rho,Tr_rho2\r\n1,0.1,0.3,1,0.9\r\n2,0.2,0.4,1,0.8\r\n");
  REQUIRE(p.size() == 2);
  CHECK(p.has_purity());
  CHECK(*p.rows[1].trace_rho_sq == 0.8);

  CHECK(code_of([] { parse("R_angstrom,E_corr,S_vN\n1,0.1,1.2\n"); }) == ErrorCode::InvariantViolation);
  CHECK(code_of([] { parse("R_angstrom,E_corr,S_vN\n1,0.1,0.2\n1,0.2,0.3\n"); }) == ErrorCode::InvariantViolation);
  CHECK(code_of([] { parse("R,E,S\n1,0.1,0.2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("R_angstrom,E_corr,S_vN\n1,0.1\n"); }) == ErrorCode::ParseError);
  const std::string msg = message_of([] { parse("R_angstrom,E_corr,S_vN\n1,0.1,0.2\n2,abc,0.3\n"); });
  CHECK(msg.find("mem:3") != std::string::npos);
  CHECK(code_of([] { ingest_series("/nonexistent/file.csv"); }) == ErrorCode::IOError);
}

TEST_CASE("alpha over R", "[ci_bridge][alpha]") {
  const auto prop = series_from({0, 1, 2, 3}, {0.1, 0.2, 0.3, 0.4}, {0.05, 0.1, 0.15, 0.2});
  CHECK(alpha_over_r(prop) == Approx(2.0).margin(1e-14));

  const auto flat = series_from({0, 1, 3}, {0.1, 0.3, 0.2}, {0.5, 0.5, 0.5});
  // constant s0 cancels: int E dR / (R_hi - R_lo) = (0.2 + 0.5) / 3
  CHECK(alpha_over_r(flat, Denominator::PlainMeasure) == Approx(0.7 / 3).margin(1e-14));

  CHECK(code_of([] { alpha_over_r(series_from({0, 1}, {0.1, 0.2}, {0.1, 0.2})); }) == ErrorCode::TooFewSamples);
  CHECK(code_of([] { alpha_over_r(series_from({0, 1, 2}, {0.1, 0.2, 0.3}, {0, 0, 0})); }) ==
        ErrorCode::ZeroMeasure);

  const auto synth = synthetic_ising_series(0.0, 1.0, 2001, 0.5, 3.0);
  CHECK(std::abs(alpha_over_r(synth) - alpha_min(MeasureKind::Entropy)) < 1e-3);
  CHECK(synth.has_purity());
}

TEST_CASE("ascending branch split", "[ci_bridge][branch]") {
  const auto up = series_from({1, 2, 3}, {0.1, 0.2, 0.3}, {0.1, 0.2, 0.3});
  CHECK(split_ascending_branch(up).size() == 3);
  const auto peak = series_from({1, 2, 3, 4}, {0.1, 0.3, 0.2, 0.1}, {0.1, 0.2, 0.3, 0.3});
  const auto b = split_ascending_branch(peak);
  REQUIRE(b.size() == 2);
  CHECK(b.rows.back().e_corr == 0.3);
  CHECK(split_ascending_branch(series_from({1, 2}, {0.2, 0.1}, {0.1, 0.1})).size() == 1);
}
