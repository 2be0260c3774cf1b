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

/// \file ci_bridge.hpp
/// Comparison against configuration-interaction data: the CISD reduced
/// entropy from excitation coefficients, the model's entropy as a function
/// of correlation energy S(E), its small-E expansion A E + B E ln E, and the
/// ingestion and fitting of external (R, E_corr, S) series.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "h2ent/deviation.hpp"
#include "h2ent/error.hpp"
#include "h2ent/measures.hpp"
#include "h2ent/numeric.hpp"

namespace h2ent {

struct CisdCoefficients {
  double c0 = 1.0;
  std::vector<double> singles;
  std::vector<double> doubles_mixed;
  std::vector<double> doubles_paired;
};

inline constexpr double kNormalizationTol = 1e-8;

/// Binary entropy of the two occupation weights
///   p = sum |c1|^2 + sum |c12|^2,   q = |c0|^2 + sum |c2|^2.
/// Squares are summed in sorted order so that reordering coefficients
/// within a class gives bit-identical results.
inline double cisd_entropy(const CisdCoefficients& c) {
  const auto weight = [](const std::vector<double>& v) {
    std::vector<double> sq(v.size());
    std::transform(v.begin(), v.end(), sq.begin(), [](double x) { return x * x; });
    std::sort(sq.begin(), sq.end());
    return std::accumulate(sq.begin(), sq.end(), 0.0);
  };
  const double p = weight(c.singles) + weight(c.doubles_mixed);
  const double q = c.c0 * c.c0 + weight(c.doubles_paired);
  if (std::abs(p + q - 1.0) > kNormalizationTol)
    throw Error(ErrorCode::NotNormalized,
                "cisd_entropy: squared coefficients sum to " + std::to_string(p + q));
  double s = 0.0;
  for (double x : {p, q})
    if (x > 0.0) s -= x * std::log2(x);
  return s;
}

/// Model entropy (bits) as a function of the correlation energy e > 0, in
/// units of B, at g = 1.
inline double s_of_ecorr(double e) {
  if (!(e > 0.0)) throw Error(ErrorCode::NonPositive, "s_of_ecorr: correlation energy must be > 0");
  const double two_e2 = 2.0 * (e + 2.0);
  const double num = e * std::log(e / two_e2) + (e + 4.0) * std::log((e + 4.0) / two_e2);
  return -num / ((e + 2.0) * std::log(4.0));
}

/// Inverse of E_corr(lambda) = sqrt(4 + lambda^2) - 2.
inline double lambda_of_ecorr(double e) { return std::sqrt(e * (e + 4.0)); }

struct ExpansionCoefficients {
  double a = 0.0;
  double b = 0.0;
};

/// Literal small-E coefficients as printed alongside the expansion; kept
/// only for side-by-side reporting against the fitted values.
namespace printed {
inline constexpr double kA = 0.5;
inline const double kB = -1.0 / (4.0 * std::numbers::ln2);
inline const double kLinearSlope = 0.25 * (1.0 + 1.0 / std::numbers::ln2);
}  // namespace printed

/// Leading-order coefficients from the series of S(E) at E -> 0:
/// S = (1/2 + 1/(4 ln 2)) E - E ln E / (4 ln 2) + O(E^2 ln E).
inline ExpansionCoefficients expansion_coefficients_analytic() {
  const double ln2 = std::numbers::ln2;
  return {0.5 + 1.0 / (4.0 * ln2), -1.0 / (4.0 * ln2)};
}

struct LogLinearFit {
  double a_coef = 0.0;
  double b_coef = 0.0;
  double rss = 0.0;
};

/// Least squares fit of y ~ a e + b e ln e. With `relative` the residuals
/// are weighted by 1/e, i.e. relative error is minimized.
inline LogLinearFit fit_log_linear(std::span<const double> e, std::span<const double> y,
                                   bool relative = false) {
  if (e.size() != y.size()) throw Error(ErrorCode::InvalidParams, "fit_log_linear: size mismatch");
  if (e.size() < 2) throw Error(ErrorCode::TooFewSamples, "fit_log_linear: need at least two points");
  std::vector<double> u(e.size()), v(e.size()), w;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!(e[i] > 0.0)) throw Error(ErrorCode::NonPositive, "fit_log_linear: E_corr must be > 0");
    u[i] = e[i];
    v[i] = e[i] * std::log(e[i]);
  }
  if (std::all_of(e.begin(), e.end(), [&](double x) { return x == e.front(); }))
    throw Error(ErrorCode::SingularBasis, "fit_log_linear: all E_corr values are equal");
  if (relative) {
    w.resize(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) w[i] = 1.0 / e[i];
  }
  const auto fit = numeric::least_squares_2(u, v, y, w);
  return {fit.c1, fit.c2, fit.rss};
}

inline constexpr double kExpansionLo = 1e-6;
inline constexpr double kExpansionHi = 1e-2;
inline constexpr std::size_t kExpansionPoints = 200;

/// Small-E coefficients fitted to s_of_ecorr on a geometric grid over
/// [1e-6, 1e-2], minimizing relative error.
inline ExpansionCoefficients expansion_coefficients() {
  std::vector<double> e(kExpansionPoints), s(kExpansionPoints);
  const double ratio = std::log(kExpansionHi / kExpansionLo) / static_cast<double>(kExpansionPoints - 1);
  for (std::size_t i = 0; i < kExpansionPoints; ++i) {
    e[i] = kExpansionLo * std::exp(ratio * static_cast<double>(i));
    s[i] = s_of_ecorr(e[i]);
  }
  const auto fit = fit_log_linear(e, s, true);
  return {fit.a_coef, fit.b_coef};
}

struct Sample {
  double r = 0.0;  // Angstrom
  double e_corr = 0.0;
  double entropy = 0.0;  // bits
  std::optional<double> trace_rho;
  std::optional<double> trace_rho_sq;
};

struct SampleSeries {
  std::vector<Sample> rows;

  std::size_t size() const noexcept { return rows.size(); }
  bool has_purity() const {
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Sample& s) {
             return s.trace_rho.has_value() && s.trace_rho_sq.has_value();
           });
  }
};

namespace detail {

inline std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline double parse_number(const std::string& field, std::size_t line_no, const std::string& source) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (field.empty() || used != field.size() || !std::isfinite(v))
    throw Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line_no) + ": not a finite number: '" + field + "'");
  return v;
}

}  // namespace detail

/// Validates and sorts rows: distinct R, entropy in [0, 1], finite E_corr.
inline SampleSeries make_series(std::vector<Sample> rows) {
  for (const auto& s : rows) {
    if (!std::isfinite(s.r) || !std::isfinite(s.e_corr))
      throw Error(ErrorCode::InvariantViolation, "series row has a non-finite value");
    if (s.entropy < 0.0 || s.entropy > 1.0)
      throw Error(ErrorCode::InvariantViolation,
                  "row R=" + std::to_string(s.r) + ": entropy " + std::to_string(s.entropy) +
                      " outside [0, 1]");
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Sample& a, const Sample& b) { return a.r < b.r; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].r > rows[i - 1].r))
      throw Error(ErrorCode::InvariantViolation, "duplicate abscissa R=" + std::to_string(rows[i].r));
  return {std::move(rows)};
}

/// Reads `R_angstrom,E_corr,S_vN[,Tr_rho,Tr_rho2]` CSV. Lines starting with
/// '#' and blank lines are skipped.
inline SampleSeries parse_series(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool purity = false;
  std::vector<Sample> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = detail::split_csv(t);
    if (!header_seen) {
      const bool base = fields.size() >= 3 && fields[0] == "R_angstrom" && fields[1] == "E_corr" &&
                        fields[2] == "S_vN";
      purity = fields.size() == 5 && fields[3] == "Tr_rho" && fields[4] == "Tr_rho2";
      if (!base || (fields.size() != 3 && !purity))
        throw Error(ErrorCode::ParseError,
                    source + ":" + std::to_string(line_no) +
                        ": expected header R_angstrom,E_corr,S_vN[,Tr_rho,Tr_rho2]");
      header_seen = true;
      continue;
    }
    const std::size_t want = purity ? 5 : 3;
    if (fields.size() != want)
      throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line_no) + ": expected " +
                                             std::to_string(want) + " fields, got " +
                                             std::to_string(fields.size()));
    Sample s;
    s.r = detail::parse_number(fields[0], line_no, source);
    s.e_corr = detail::parse_number(fields[1], line_no, source);
    s.entropy = detail::parse_number(fields[2], line_no, source);
    if (purity) {
      s.trace_rho = detail::parse_number(fields[3], line_no, source);
      s.trace_rho_sq = detail::parse_number(fields[4], line_no, source);
    }
    if (s.entropy < 0.0 || s.entropy > 1.0)
      throw Error(ErrorCode::InvariantViolation, source + ":" + std::to_string(line_no) +
                                                     ": entropy " + fields[2] + " outside [0, 1]");
    rows.push_back(s);
  }
  if (!header_seen) throw Error(ErrorCode::ParseError, source + ": missing header");
  return make_series(std::move(rows));
}

inline SampleSeries ingest_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot open '" + path + "'");
  return parse_series(in, path);
}

enum class Denominator { SquaredMeasure, PlainMeasure };

/// Trapezoid-rule scale over R:
///   int E S dR / int S^2 dR   (SquaredMeasure)
///   int E S dR / int S dR     (PlainMeasure)
inline double alpha_over_r(const SampleSeries& s, Denominator d = Denominator::SquaredMeasure) {
  if (s.size() < 3) throw Error(ErrorCode::TooFewSamples, "alpha_over_r: need at least three samples");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto& a = s.rows[i - 1];
    const auto& b = s.rows[i];
    const double h = 0.5 * (b.r - a.r);
    num += h * (a.e_corr * a.entropy + b.e_corr * b.entropy);
    den += d == Denominator::SquaredMeasure ? h * (a.entropy * a.entropy + b.entropy * b.entropy)
                                            : h * (a.entropy + b.entropy);
  }
  if (!(den > 0.0)) throw Error(ErrorCode::ZeroMeasure, "alpha_over_r: entropy vanishes on the series");
  return num / den;
}

/// Longest prefix over which E_corr strictly increases.
inline SampleSeries split_ascending_branch(const SampleSeries& s) {
  SampleSeries out;
  if (s.rows.empty()) return out;
  out.rows.push_back(s.rows.front());
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s.rows[i].e_corr > s.rows[i - 1].e_corr)) break;
    out.rows.push_back(s.rows[i]);
  }
  return out;
}

inline LogLinearFit fit_log_linear(const SampleSeries& s) {
  std::vector<double> e, y;
  for (const auto& row : s.rows) {
    e.push_back(row.e_corr);
    y.push_back(row.entropy);
  }
  return fit_log_linear(e, y);
}

/// Series generated from the g = 1 model with lambda mapped linearly onto
/// R in [r_lo, r_hi]. Purity columns are those of the pure ground state.
inline SampleSeries synthetic_ising_series(double lambda_lo, double lambda_hi, std::size_t n,
                                           double r_lo, double r_hi) {
  std::vector<Sample> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    const double lambda = lambda_lo + t * (lambda_hi - lambda_lo);
    Sample s;
    s.r = r_lo + t * (r_hi - r_lo);
    s.e_corr = correlation_energy(lambda);
    s.entropy = ground_measure(MeasureKind::Entropy, 1.0, lambda);
    s.trace_rho = 1.0;
    s.trace_rho_sq = 1.0;
    rows.push_back(s);
  }
  return make_series(std::move(rows));
}

}  // namespace h2ent
