#include "balcut/error.hpp"

namespace balcut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EmptyOrFullCut: return "EmptyOrFullCut";
    case ErrorCode::NegativeBeta: return "NegativeBeta";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BreakdownNotConverged: return "BreakdownNotConverged";
    case ErrorCode::DegenerateEmbedding: return "DegenerateEmbedding";
    case ErrorCode::SweepCutMissing: return "SweepCutMissing";
    case ErrorCode::NoQualifyingSweep: return "NoQualifyingSweep";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RecursionDepthExceeded: return "RecursionDepthExceeded";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidGraph:
    case ErrorCode::DisconnectedGraph:
    case ErrorCode::Parse:
    case ErrorCode::Io:
    case ErrorCode::InvalidParams:
    case ErrorCode::EmptyOrFullCut:
    case ErrorCode::NegativeBeta:
    case ErrorCode::SizeLimit:
    case ErrorCode::NotApplicable:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace balcut
