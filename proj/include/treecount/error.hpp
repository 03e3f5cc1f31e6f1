#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treecount {

enum class ErrorCode {
  IndexOutOfRange,
  DuplicateEdge,
  EmptySide,
  EmptyPartition,
  InvalidPartition,
  InfeasibleSpec,
  ConnectivityRetriesExhausted,
  NonIntegerInterpolation,
  NonSymmetric,
  NotPSD,
  NotSingular,
  Disconnected,
  TooLarge,
  TooSmall,
  InvalidTheta,
  InfeasibleK,
  ThetaGeqA,
  Degenerate,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace treecount
