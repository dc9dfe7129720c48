#pragma once

// Realizability of K_{n,m} automorphisms by homeomorphisms of S^3, decided
// from the cycle signature alone. Cases 1-9 are the orientation preserving
// conditions, 10-13 the orientation reversing ones; case 12 has sub-cases
// a-d. A case matches a signature either directly or after relabelling
// V <-> W, recorded in CaseId::interchanged.

#include <string>
#include <vector>

#include "bipsym/bipartite.hpp"
#include "bipsym/orientation.hpp"

namespace bipsym {

struct CaseId {
  Orientation orientation = Orientation::Preserving;
  int number = 1;
  char sub = '\0';  // 'a'..'d' for case 12 only
  bool interchanged = false;

  // "OP5", "OR12c"; the interchange flag is not part of the label.
  std::string label() const;

  friend bool operator==(const CaseId&, const CaseId&) = default;
};

struct RealizabilityVerdict {
  // In case order; a case matching both directly and after interchange
  // appears twice, once per flag value.
  std::vector<CaseId> op_cases;
  std::vector<CaseId> or_cases;

  bool op_realizable() const { return !op_cases.empty(); }
  bool or_realizable() const { return !or_cases.empty(); }
  bool realizable(Orientation o) const {
    return o == Orientation::Preserving ? op_realizable() : or_realizable();
  }
  const std::vector<CaseId>& cases(Orientation o) const {
    return o == Orientation::Preserving ? op_cases : or_cases;
  }

  // Distinct labels in case order.
  std::vector<std::string> labels(Orientation o) const;
  bool matches(const std::string& label) const;

  friend bool operator==(const RealizabilityVerdict&,
                         const RealizabilityVerdict&) = default;
};

// Throws Error(kOutOfTheoremScope) if n <= 2 or m <= 2.
RealizabilityVerdict classify(const CycleSignature& sig);

RealizabilityVerdict classify_aut(const BipartiteAutomorphism& aut);

}  // namespace bipsym
