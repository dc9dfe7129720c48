#pragma once

// Exhaustive classification of Aut(K_{n,m}), optionally realizing and
// verifying every realizable (automorphism, orientation) pair.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "bipsym/bipartite.hpp"

namespace bipsym {

struct CensusOptions {
  bool realize_all = false;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
  EnumerationLimits limits;
};

struct CensusReport {
  BipartiteShape shape{1, 1};
  std::uint64_t total = 0;
  // Every case label, including those with count 0. An automorphism counts
  // once towards each distinct label of its verdict.
  std::map<std::string, std::uint64_t> per_case;
  std::uint64_t realizable_op = 0;
  std::uint64_t realizable_or = 0;
  std::uint64_t unrealizable_op = 0;
  std::uint64_t unrealizable_or = 0;
  // Pairs whose realization passed verification; set only with realize_all.
  std::optional<std::uint64_t> realized_verified;
  std::string tool_version;
  std::uint64_t seed = 1;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

// All case labels in case order.
const std::vector<std::string>& case_labels();

// Errors: kTooLarge (enumeration cap), kOutOfTheoremScope.
CensusReport census(const BipartiteShape& shape, const CensusOptions& options = {});

// "census_N_M_<version>_<seed>.json", with "_realized" before the extension
// when realize_all is set.
std::string census_cache_filename(const BipartiteShape& shape,
                                  const CensusOptions& options);

// Reads the cached report from dir if present, otherwise computes it and
// writes it there (creating dir). `hit` reports which happened.
CensusReport census_cached(const BipartiteShape& shape,
                           const CensusOptions& options,
                           const std::filesystem::path& dir,
                           bool* hit = nullptr);

// "label,count" rows for every case, then the summary rows.
std::string census_csv(const CensusReport& report);

}  // namespace bipsym
