#include "pulsent/error.hpp"

namespace pulsent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::InvalidPulse: return "InvalidPulse";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::ResonanceRequired: return "ResonanceRequired";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NonDiagonalInput: return "NonDiagonalInput";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pulsent
