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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace h2ent {

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  BadTrace,
  LambdaZero,
  InvalidParams,
  InvalidDensity,
  WrongRegion,
  QuadratureNotConverged,
  ZeroMeasure,
  NegativeDistance,
  NotNormalized,
  NonPositive,
  ParseError,
  InvariantViolation,
  TooFewSamples,
  SingularBasis,
  IOError,
  UsageError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::BadTrace: return "BadTrace";
    case ErrorCode::LambdaZero: return "LambdaZero";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidDensity: return "InvalidDensity";
    case ErrorCode::WrongRegion: return "WrongRegion";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::ZeroMeasure: return "ZeroMeasure";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type; the code is
// what callers (and the CLI's `code: message` diagnostics) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace h2ent
