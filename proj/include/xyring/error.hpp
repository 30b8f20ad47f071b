// Copyright 2026 The xyring Authors
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

namespace xyring {

enum class ErrorKind {
  InvalidSize,
  InvalidSector,
  InvalidParams,
  SectorMismatch,
  DimensionMismatch,
  ConvergenceFailure,
  BadSites,
  NumericalFailure,
  NotNormalized,
  InvalidRange,
  UnsupportedAnisotropy,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::InvalidSector: return "InvalidSector";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SectorMismatch: return "SectorMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::BadSites: return "BadSites";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::UnsupportedAnisotropy: return "UnsupportedAnisotropy";
  }
  return "Unknown";
}

/// True for failures of the numerics rather than of the caller's input.
constexpr bool is_numerical(ErrorKind kind) {
  return kind == ErrorKind::ConvergenceFailure || kind == ErrorKind::NumericalFailure ||
         kind == ErrorKind::NotNormalized;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xyring
