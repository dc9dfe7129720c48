#pragma once

// Independent checks that an isometry and vertex coordinates realize an
// automorphism, plus fixed-set structure checks on the isometry alone.

#include <optional>
#include <string>
#include <vector>

#include "bipsym/bipartite.hpp"
#include "bipsym/embedding.hpp"
#include "bipsym/geometry.hpp"

namespace bipsym {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<double> measured;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct RealizationCertificate {
  std::vector<CheckResult> checks;

  // Conjunction of every pass flag (true for an empty list).
  bool overall() const;
  const CheckResult* find(const std::string& name) const;

  friend bool operator==(const RealizationCertificate&,
                         const RealizationCertificate&) = default;
};

// Checks, by name:
//   unit_norm    every point within 1e-12 of the unit sphere
//   orthogonal   |M^T M - I|_inf <= 1e-12
//   order        M^r = I within tol, M^k != I (deviation > 1e-6) for k < r
//   orientation  sign(det M) matches the isometry's orientation
//   separation   distinct nodes at least 1e-6 apart
//   induces      nearest node to M p is the image node, within tol; also
//                requires the separation floor
//   smith        fixed-set kinds allowed by the sign of det M^i
//   eel1..eel4   the four edge-embedding hypotheses
// Subdivision nodes follow the automorphism via extend_to_subdivision.
// Throws Error(kShapeMismatch) if the embedding is for another shape.
RealizationCertificate verify(const BipartiteAutomorphism& aut,
                              const Isometry4& iso,
                              const SpatialEmbedding& emb, double tol = 1e-9);

// One check "power_i" per 1 <= i < claimed order with M^i != I.
RealizationCertificate smith_check(const Isometry4& iso);

// For a fixed-point free isometry: the distinct circles fixed by its powers
// are at most two, and two circles are orthogonal complements, each
// M-invariant, with lcm of their minimal fixing powers equal to the order.
// Throws Error(kPrecondition) if M itself fixes a point.
RealizationCertificate two_circle_check(const Isometry4& iso);

}  // namespace bipsym
