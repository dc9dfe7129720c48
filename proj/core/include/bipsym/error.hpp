#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bipsym {

enum class ErrorCode {
  kInvalidShape,
  kInvalidVertex,
  kNotBijective,
  kMixedParts,
  kSwapOnUnequalParts,
  kParseError,
  kDuplicateVertex,
  kShapeMismatch,
  kTooLarge,
  kOutOfTheoremScope,
  kOrderMismatch,
  kInvalidIsometry,
  kNotRealizable,
  kPlacementFailure,
  kPrecondition,
  kFormat,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bipsym
