#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphcake {

enum class ErrorKind {
  kInvalidGraph,
  kInvalidInstance,
  kParseError,
  kUnknownEdge,
  kMalformedPiece,
  kDisconnectedPiece,
  kNotAlmostBridgeless,
  kLabelingNotContiguous,
  kBudgetExceeded,
  kInsufficientValue,
  kZeroValuePiece,
  kDomainError,
  kNotAStar,
  kAlphaOutOfRange,
  kNotHeightTwoTree,
  kTooManyAgents,
  kPreconditionFailed,
  kUnknownFixture,
  kUnknownProtocol,
  kBadParameters,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace graphcake
