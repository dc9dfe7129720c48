#pragma once

#include <cstdint>

#include "bipsym/bipartite.hpp"
#include "bipsym/classifier.hpp"
#include "bipsym/embedding.hpp"
#include "bipsym/geometry.hpp"

namespace bipsym {

struct Realization {
  Isometry4 isometry;
  SpatialEmbedding embedding;
  CaseId realized_case;
  std::uint64_t seed = 0;
};

// The case whose construction realize() uses: for orientation preserving,
// fixed vertices or a preserving r-cycle action go to a rotation, everything
// else to a glide rotation; for orientation reversing, case 11 goes to a
// reflection and cases 10, 12, 13 to improper rotations. Throws
// Error(kNotRealizable) when the verdict has no case of that orientation.
CaseId dispatch_case(const RealizabilityVerdict& verdict,
                     Orientation orientation);

// Builds an isometry of S^3 and unit vertex coordinates (plus midpoint
// vertices on edges some power would otherwise invert) such that the matrix
// permutes the points exactly as the automorphism permutes the vertices.
// Generic orbits are seeded from `seed`; a candidate orbit point within
// 1e-6 of a landmark or an earlier point is redrawn, and Error
// (kPlacementFailure) follows after 1000 redraws of one orbit.
// Errors: kOutOfTheoremScope, kNotRealizable, kPlacementFailure.
Realization realize(const BipartiteAutomorphism& aut, Orientation orientation,
                    std::uint64_t seed);

}  // namespace bipsym
