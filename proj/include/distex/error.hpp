//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace distex {

enum class ErrorKind {
  InvalidGraph,
  DisconnectedGraph,
  VertexOutOfRange,
  NoSuchEdge,
  OrderTooLarge,
  BadParameters,
  NoConvergence,
  NotSymmetric,
  ZeroDiagonalViolated,
  OrderMismatch,
  ParamOutOfRange,
  NotADiamondEdge,
  BadDegree,
  CycleBudgetExceeded,
  ParseError,
  ArithmeticOverflow,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ZeroDiagonalViolated: return "ZeroDiagonalViolated";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NotADiamondEdge: return "NotADiamondEdge";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures remember the byte offset where the input went wrong.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::ParseError,
              "at byte " + std::to_string(offset) + ": " + what),
        offset_(offset),
        reason_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace distex
