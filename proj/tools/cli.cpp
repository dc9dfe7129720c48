#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bipsym/census.hpp"
#include "bipsym/classifier.hpp"
#include "bipsym/error.hpp"
#include "bipsym/json_io.hpp"
#include "bipsym/realize.hpp"
#include "bipsym/verifier.hpp"
#include "bipsym/version.hpp"

namespace bipsym {
namespace {

BipartiteShape parse_graph(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::kParseError, "--graph expects N,M, got \"" + text + "\"");
  }
  try {
    std::size_t used_n = 0;
    std::size_t used_m = 0;
    const std::string ns = text.substr(0, comma);
    const std::string ms = text.substr(comma + 1);
    const int n = std::stoi(ns, &used_n);
    const int m = std::stoi(ms, &used_m);
    if (used_n != ns.size() || used_m != ms.size()) throw std::invalid_argument("trailing");
    return {n, m};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError, "--graph expects N,M, got \"" + text + "\"");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfTheoremScope: return kExitOutOfScope;
    case ErrorCode::kNotRealizable: return kExitNotRealizable;
    case ErrorCode::kPlacementFailure: return kExitPlacementFailure;
    default: return kExitUsage;
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Realizability of K_{n,m} automorphisms by symmetries of S^3",
               "bipsym"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string graph;
  std::string perm;
  std::string orientation;
  std::uint64_t seed = 1;
  std::string output;
  std::string file;
  double tol = 1e-9;
  int n = 0;
  int m = 0;
  bool realize_all = false;
  std::string format = "json";
  std::string cache_dir;
  unsigned threads = 0;

  CLI::App* classify_cmd = app.add_subcommand("classify", "Decide realizability of one automorphism");
  classify_cmd->add_option("--graph", graph, "Shape N,M")->required();
  classify_cmd->add_option("--perm", perm, "Cycle notation, e.g. \"(v1 v2)(w1 w2)\"")->required();

  CLI::App* realize_cmd = app.add_subcommand("realize", "Construct a realizing isometry and embedding");
  realize_cmd->add_option("--graph", graph, "Shape N,M")->required();
  realize_cmd->add_option("--perm", perm, "Cycle notation")->required();
  realize_cmd->add_option("--orientation", orientation, "op or or")
      ->required()
      ->check(CLI::IsMember({"op", "or"}));
  realize_cmd->add_option("--seed", seed, "Placement seed");
  realize_cmd->add_option("-o,--output", output, "Write JSON here instead of stdout");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a realization file");
  verify_cmd->add_option("file", file, "Realization JSON")->required();
  verify_cmd->add_option("--tol", tol, "Numerical tolerance");

  CLI::App* census_cmd = app.add_subcommand("census", "Classify all of Aut(K_{n,m})");
  census_cmd->add_option("n", n, "Size of V")->required();
  census_cmd->add_option("m", m, "Size of W")->required();
  census_cmd->add_flag("--realize-all", realize_all, "Realize and verify every realizable pair");
  census_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_option("--cache-dir", cache_dir, "Cache directory (default $BIPSYM_CACHE_DIR)");
  census_cmd->add_option("--seed", seed, "Placement seed for --realize-all");
  census_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bipsym: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      const auto aut = parse_cycles(parse_graph(graph), perm);
      out << canonical_dump(to_json(classify_aut(aut)));
      return kExitOk;
    }

    if (realize_cmd->parsed()) {
      const auto aut = parse_cycles(parse_graph(graph), perm);
      const Orientation o = orientation == "op" ? Orientation::Preserving
                                                : Orientation::Reversing;
      const std::string text = canonical_dump(to_json(realize(aut, o, seed), aut));
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream f(output, std::ios::binary | std::ios::trunc);
        if (!f || !(f << text)) throw Error(ErrorCode::kIo, "cannot write " + output);
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const LoadedRealization r = realization_from_json(parse_json(read_file(file)));
      const RealizationCertificate cert =
          verify(r.automorphism, r.isometry, r.embedding, tol);
      out << canonical_dump(to_json(cert));
      return cert.overall() ? kExitOk : kExitVerifyFailed;
    }

    if (census_cmd->parsed()) {
      const BipartiteShape shape(n, m);
      CensusOptions options;
      options.realize_all = realize_all;
      options.seed = seed;
      options.threads = threads;
      if (cache_dir.empty()) {
        if (const char* env = std::getenv("BIPSYM_CACHE_DIR")) cache_dir = env;
      }
      const CensusReport report = cache_dir.empty()
                                      ? census(shape, options)
                                      : census_cached(shape, options, cache_dir);
      out << (format == "csv" ? census_csv(report) : canonical_dump(to_json(report)));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "bipsym: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace bipsym
