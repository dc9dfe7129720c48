#pragma once

// JSON forms of the library's values. canonical_dump gives sorted keys and
// doubles with 17 significant digits, so equal values give equal bytes.

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "bipsym/bipartite.hpp"
#include "bipsym/census.hpp"
#include "bipsym/classifier.hpp"
#include "bipsym/embedding.hpp"
#include "bipsym/geometry.hpp"
#include "bipsym/realize.hpp"
#include "bipsym/verifier.hpp"

namespace bipsym {

using Json = nlohmann::json;

std::string canonical_dump(const Json& j);

// {"n", "m", "perm"} with perm in cycle notation.
Json to_json(const BipartiteAutomorphism& aut);
BipartiteAutomorphism automorphism_from_json(const Json& j);

// {"op": {"realizable", "cases"}, "or": {...}, "interchanged": {label: bool}}
// where interchanged[label] is true when the label matched only with the
// parts relabelled.
Json to_json(const RealizabilityVerdict& verdict);

Json to_json(const Realization& realization, const BipartiteAutomorphism& aut);

struct LoadedRealization {
  BipartiteAutomorphism automorphism;
  Isometry4 isometry;
  SpatialEmbedding embedding;
  std::string case_label;
  std::uint64_t seed = 0;
};

// The matrix is loaded unvalidated so that verify() can report its defects.
LoadedRealization realization_from_json(const Json& j);

Json to_json(const RealizationCertificate& cert);

Json to_json(const CensusReport& report);
CensusReport census_from_json(const Json& j);

// Throws Error(kFormat) on malformed text.
Json parse_json(const std::string& text);

}  // namespace bipsym
