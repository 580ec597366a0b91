#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace balcut {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  InvalidGraph,
  DisconnectedGraph,
  Parse,
  Io,
  InvalidParams,
  EmptyOrFullCut,
  NegativeBeta,
  SizeLimit,
  NotApplicable,
  BreakdownNotConverged,
  DegenerateEmbedding,
  SweepCutMissing,
  NoQualifyingSweep,
  PreconditionViolated,
  RecursionDepthExceeded,
};

std::string_view to_string(ErrorCode code);

// Input errors are the caller's fault; everything else is a broken contract.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace balcut
