#pragma once

#include <cstdint>
#include <string_view>

namespace bipsym {

// Orientation class of a homeomorphism of S^3 (sign of the determinant for
// an isometry given as a 4x4 orthogonal matrix).
enum class Orientation : std::uint8_t { Preserving, Reversing };

// "op" / "or", the short forms used on the command line and in JSON.
constexpr std::string_view short_name(Orientation o) {
  return o == Orientation::Preserving ? "op" : "or";
}

}  // namespace bipsym
