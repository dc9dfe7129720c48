#include "bipsym/error.hpp"

namespace bipsym {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kNotBijective: return "NotBijective";
    case ErrorCode::kMixedParts: return "MixedParts";
    case ErrorCode::kSwapOnUnequalParts: return "SwapOnUnequalParts";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kOutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kInvalidIsometry: return "InvalidIsometry";
    case ErrorCode::kNotRealizable: return "NotRealizable";
    case ErrorCode::kPlacementFailure: return "PlacementFailure";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kFormat: return "Format";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace bipsym
