#include "bipsym/census.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "bipsym/classifier.hpp"
#include "bipsym/error.hpp"
#include "bipsym/json_io.hpp"
#include "bipsym/realize.hpp"
#include "bipsym/verifier.hpp"
#include "bipsym/version.hpp"

namespace bipsym {
namespace {

struct Tally {
  std::map<std::string, std::uint64_t> per_case;
  std::uint64_t realizable_op = 0;
  std::uint64_t realizable_or = 0;
  std::uint64_t verified = 0;

  void merge(const Tally& t) {
    for (const auto& [label, c] : t.per_case) per_case[label] += c;
    realizable_op += t.realizable_op;
    realizable_or += t.realizable_or;
    verified += t.verified;
  }
};

bool realizes_and_verifies(const BipartiteAutomorphism& aut, Orientation o,
                           std::uint64_t seed) {
  try {
    const Realization r = realize(aut, o, seed);
    return verify(aut, r.isometry, r.embedding).overall();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kPlacementFailure) return false;
    throw;
  }
}

Tally tally_range(const BipartiteShape& shape, std::uint64_t first,
                  std::uint64_t last, const CensusOptions& options) {
  Tally t;
  AutomorphismCursor cursor(shape, first);
  for (std::uint64_t i = first; i < last; ++i, cursor.advance()) {
    const BipartiteAutomorphism aut = cursor.current();
    const RealizabilityVerdict verdict = classify_aut(aut);
    for (Orientation o : {Orientation::Preserving, Orientation::Reversing}) {
      for (const std::string& label : verdict.labels(o)) ++t.per_case[label];
      if (!verdict.realizable(o)) continue;
      ++(o == Orientation::Preserving ? t.realizable_op : t.realizable_or);
      if (options.realize_all && realizes_and_verifies(aut, o, options.seed)) {
        ++t.verified;
      }
    }
  }
  return t;
}

}  // namespace

const std::vector<std::string>& case_labels() {
  static const std::vector<std::string> labels = {
      "OP1", "OP2", "OP3", "OP4", "OP5", "OP6", "OP7", "OP8", "OP9",
      "OR10", "OR11", "OR12a", "OR12b", "OR12c", "OR12d", "OR13"};
  return labels;
}

CensusReport census(const BipartiteShape& shape, const CensusOptions& options) {
  if (!shape.in_theorem_scope()) {
    throw Error(ErrorCode::kOutOfTheoremScope,
                "census needs n > 2 and m > 2");
  }
  const AutomorphismRange range = enumerate_automorphisms(shape, options.limits);
  const std::uint64_t total = range.size();

  unsigned workers = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));

  std::vector<Tally> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = std::min(total, chunk * w);
    const std::uint64_t last = std::min(total, first + chunk);
    pool.emplace_back([&, w, first, last] {
      try {
        partial[w] = tally_range(shape, first, last, options);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Tally all;
  for (const std::string& label : case_labels()) all.per_case[label] = 0;
  for (const Tally& t : partial) all.merge(t);

  CensusReport report;
  report.shape = shape;
  report.total = total;
  report.per_case = std::move(all.per_case);
  report.realizable_op = all.realizable_op;
  report.realizable_or = all.realizable_or;
  report.unrealizable_op = total - all.realizable_op;
  report.unrealizable_or = total - all.realizable_or;
  if (options.realize_all) report.realized_verified = all.verified;
  report.tool_version = kToolVersion;
  report.seed = options.seed;
  return report;
}

std::string census_cache_filename(const BipartiteShape& shape,
                                  const CensusOptions& options) {
  std::ostringstream name;
  name << "census_" << shape.n() << '_' << shape.m() << '_' << kToolVersion
       << '_' << options.seed << (options.realize_all ? "_realized" : "")
       << ".json";
  return name.str();
}

CensusReport census_cached(const BipartiteShape& shape,
                           const CensusOptions& options,
                           const std::filesystem::path& dir, bool* hit) {
  const std::filesystem::path file = dir / census_cache_filename(shape, options);
  if (std::ifstream in(file); in) {
    std::stringstream text;
    text << in.rdbuf();
    if (hit) *hit = true;
    return census_from_json(parse_json(text.str()));
  }
  if (hit) *hit = false;
  CensusReport report = census(shape, options);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  }
  // Write beside the target and rename, so a reader never sees half a file.
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << canonical_dump(to_json(report));
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename " + tmp.string() + ": " + ec.message());
  return report;
}

std::string census_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "label,count\n";
  for (const std::string& label : case_labels()) {
    const auto it = report.per_case.find(label);
    out << label << ',' << (it == report.per_case.end() ? 0 : it->second) << '\n';
  }
  out << "total," << report.total << '\n'
      << "realizable_op," << report.realizable_op << '\n'
      << "realizable_or," << report.realizable_or << '\n'
      << "unrealizable_op," << report.unrealizable_op << '\n'
      << "unrealizable_or," << report.unrealizable_or << '\n';
  if (report.realized_verified) {
    out << "realized_verified," << *report.realized_verified << '\n';
  }
  return out.str();
}

}  // namespace bipsym
