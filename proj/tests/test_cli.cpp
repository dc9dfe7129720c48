#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bipsym/json_io.hpp"
#include "bipsym/version.hpp"
#include "cli.hpp"

namespace bipsym {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "bipsym");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, ClassifyRotation) {
  const CliRun r = run({"classify", "--graph", "3,3", "--perm", "(v1 v2 v3)(w1 w2 w3)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["op"]["realizable"], true);
  EXPECT_EQ(j["op"]["cases"], Json::array({"OP1"}));
  EXPECT_EQ(j["or"]["realizable"], false);
}

TEST(Cli, ClassifyUnrealizableBothWays) {
  const CliRun r = run({"classify", "--graph", "4,3", "--perm", "(v1 v2 v3)(w1 w2)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["op"]["realizable"], false);
  EXPECT_EQ(j["or"]["realizable"], false);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", "--graph", "2,3", "--perm", "(v1 v2)"}).code, kExitOutOfScope);
  EXPECT_EQ(run({"classify", "--graph", "3,3", "--perm", "(v1 v4)"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--graph", "3,3", "--perm", "(v1 w1"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--graph", "three", "--perm", "()"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--graph", "3,3"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"realize", "--graph", "3,3", "--perm", "(v1 v2 v3)(w1 w2 w3)",
                 "--orientation", "or"})
                .code,
            kExitNotRealizable);
  EXPECT_EQ(run({"realize", "--graph", "3,3", "--perm", "()", "--orientation", "up"}).code,
            kExitUsage);
  EXPECT_EQ(run({"verify", "/nonexistent/file.json"}).code, kExitUsage);
  EXPECT_EQ(run({"census", "8", "8"}).code, kExitUsage);
  EXPECT_EQ(run({"census", "2", "2"}).code, kExitOutOfScope);
}

TEST(Cli, DiagnosticsGoToStandardError) {
  const CliRun r = run({"classify", "--graph", "3,3", "--perm", "(v1 v4)"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  const CliRun v = run({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(v.out, std::string(kToolVersion) + "\n");
}

TEST(Cli, RealizeReflection) {
  const CliRun r = run({"realize", "--graph", "3,4", "--perm", "(w3 w4)", "--orientation", "or"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse_json(r.out);
  const Json expected = Json::array({Json::array({1.0, 0.0, 0.0, 0.0}),
                                     Json::array({0.0, 1.0, 0.0, 0.0}),
                                     Json::array({0.0, 0.0, 1.0, 0.0}),
                                     Json::array({0.0, 0.0, 0.0, -1.0})});
  EXPECT_EQ(j["matrix"], expected);
  EXPECT_EQ(j["case"], "OR11");
}

TEST(Cli, RealizeThenVerify) {
  const fs::path dir = fs::temp_directory_path() / "bipsym_cli_verify";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path file = dir / "r.json";
  const CliRun r = run({"realize", "--graph", "4,4", "--perm", "(v1 w1)(v2 w2)(v3 w3 v4 w4)",
                     "--orientation", "or", "--seed", "7", "-o", file.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());

  const CliRun v = run({"verify", file.string()});
  EXPECT_EQ(v.code, kExitOk) << v.out;
  EXPECT_EQ(parse_json(v.out)["overall"], true);

  Json j = parse_json(slurp(file));
  j["vertices"]["v1"][0] = j["vertices"]["v1"][0].get<double>() + 1e-3;
  std::ofstream(dir / "bad.json") << canonical_dump(j);
  const CliRun bad = run({"verify", (dir / "bad.json").string()});
  EXPECT_EQ(bad.code, kExitVerifyFailed);
  EXPECT_EQ(parse_json(bad.out)["overall"], false);

  fs::remove_all(dir);
}

TEST(Cli, CensusFormatsAndCache) {
  const fs::path dir = fs::temp_directory_path() / "bipsym_cli_cache";
  fs::remove_all(dir);
  const CliRun json = run({"census", "3", "3", "--cache-dir", dir.string(), "--seed", "4"});
  ASSERT_EQ(json.code, kExitOk) << json.err;
  EXPECT_EQ(parse_json(json.out)["total"], 72);
  EXPECT_TRUE(fs::exists(dir / (std::string("census_3_3_") + kToolVersion + "_4.json")));
  EXPECT_EQ(slurp(dir / (std::string("census_3_3_") + kToolVersion + "_4.json")), json.out);

  const CliRun again = run({"census", "3", "3", "--cache-dir", dir.string(), "--seed", "4"});
  EXPECT_EQ(again.out, json.out);

  const CliRun csv = run({"census", "3", "3", "--format", "csv", "--threads", "2"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("label,count\nOP1,", 0), 0u);
  EXPECT_NE(csv.out.find("\ntotal,72\n"), std::string::npos);
  EXPECT_EQ(run({"census", "3", "3", "--format", "xml"}).code, kExitUsage);

  const CliRun all = run({"census", "3", "3", "--realize-all"});
  const Json a = parse_json(all.out);
  EXPECT_EQ(a["realized_verified"], a["realizable_op"].get<int>() + a["realizable_or"].get<int>());
  fs::remove_all(dir);
}

}  // namespace
}  // namespace bipsym
