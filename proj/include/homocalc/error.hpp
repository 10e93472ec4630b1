// Copyright 2026 The homocalc Authors
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

#ifndef HOMOCALC_ERROR_HPP_
#define HOMOCALC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace homocalc {

using Vector = Eigen::VectorXd;

enum class ErrorKind {
  DimensionMismatch,
  InvalidInput,
  OutOfRange,
  NoConvergence,
  EmptyIntersection,
  EmptyFamily,
  EnvelopeViolation,
  NotOrdered,
  SaddleGap,
  LatticeMismatch,
  UnknownBuiltin,
  MissingOracle,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::EnvelopeViolation: return "EnvelopeViolation";
    case ErrorKind::NotOrdered: return "NotOrdered";
    case ErrorKind::SaddleGap: return "SaddleGap";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::MissingOracle: return "MissingOracle";
  }
  return "Unknown";
}

/// Numerical failures, as opposed to malformed input.
inline bool is_numerical(ErrorKind kind) {
  return kind == ErrorKind::NoConvergence || kind == ErrorKind::EmptyIntersection ||
         kind == ErrorKind::SaddleGap || kind == ErrorKind::EnvelopeViolation;
}

/// Every error names the operation that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string operation, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + " in " + operation +
                           (detail.empty() ? std::string() : ": " + detail)),
        kind_(kind),
        operation_(std::move(operation)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  ErrorKind kind_;
  std::string operation_;
};

namespace detail {

inline void require_dim(Eigen::Index expected, Eigen::Index got, const char* op) {
  if (expected != got) {
    throw Error(ErrorKind::DimensionMismatch, op,
                "expected dimension " + std::to_string(expected) + ", got " +
                    std::to_string(got));
  }
}

}  // namespace detail
}  // namespace homocalc

#endif  // HOMOCALC_ERROR_HPP_
