#include "spg/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace spg {
namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "spg");
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(SPG_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, GridPhiExample) {
  CliRun r = run({"grid", "phi", "--dims", "3,3,2", "--seq", "32121231"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(3,2,1,3,1,3,0)\n");
  EXPECT_NE(r.err.find("seed=1"), std::string::npos);
  CliRun j = run({"grid", "phi", "--dims", "3,3,2", "--seq", "32121231", "--json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["coords"], nlohmann::json({3, 2, 1, 3, 1, 3, 0}));
}

TEST(Cli, GridInverseAndCount) {
  EXPECT_EQ(run({"grid", "phi-inv", "--dims", "3,3,2", "--point", "(3,2,1,3,1,3,0)"}).out, "32121231\n");
  EXPECT_EQ(run({"grid", "phi-inv", "--dims", "2,2", "--point", "0,1"}).code, 2);
  EXPECT_EQ(run({"grid", "count", "--dims", "3,3,2"}).out, "560\n");
  EXPECT_EQ(run({"grid", "count", "--dims", "12,12,12,12"}).out, "235809301462142612780721600\n");
}

TEST(Cli, ConstructWithCheck) {
  CliRun r = run({"construct", "hypercube", "3", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS construction:hypercube", 0), 0u);
  EXPECT_EQ(run({"construct", "oddhost", "3", "--check"}).code, 0);
  EXPECT_EQ(run({"construct", "cycle", "8", "--check"}).code, 0);
  EXPECT_EQ(run({"construct", "cycle", "7"}).code, 2);
  CliRun plain = run({"construct", "complete", "3"});
  EXPECT_EQ(nlohmann::json::parse(plain.out)["source"], "a");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"construct", "nothing", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "p3c4", "--corpus", "weird:3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ComputeFromFiles) {
  CliRun r = run({"compute", "--in", data("k23.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "distance 2\ngeodesics 3\nedges 3\n");
  CliRun e = run({"compute", "--in", data("square.txt"), "--a", "a", "--b", "b"});
  EXPECT_EQ(e.out, "distance 2\ngeodesics 2\nedges 1\n");
  CliRun c = run({"compute", "--in", data("square.txt"), "--a", "a", "--b", "p", "--count"});
  EXPECT_EQ(c.out, "distance 3\ngeodesics 2\n");
  CliRun missing = run({"compute", "--in", data("square.txt")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("source"), std::string::npos);
  CliRun loop = run({"compute", "--in", data("bad_loop.txt"), "--a", "a", "--b", "b"});
  EXPECT_EQ(loop.code, 2);
  EXPECT_NE(loop.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"compute", "--in", data("k23.json"), "--b", "zz"}).code, 2);
}

TEST(Cli, ExportFormatsAreDeterministic) {
  CliRun j1 = run({"export", "--in", data("k23.json"), "--format", "json"});
  CliRun j2 = run({"export", "--in", data("k23.json"), "--format", "json"});
  EXPECT_EQ(j1.out, j2.out);
  auto doc = nlohmann::json::parse(j1.out);
  EXPECT_EQ(doc["edges"].size(), 3u);
  EXPECT_NE(run({"export", "--in", data("k23.json"), "--format", "dot"}).out.find("graph spg"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(run({"export", "--in", data("k23.json"), "--format", "geodesics"}).out).size(), 3u);
  EXPECT_EQ(run({"export", "--in", data("k23.json"), "--format", "png"}).code, 2);
}

TEST(Cli, ComputeWritesFiles) {
  auto dir = std::filesystem::temp_directory_path() / "spg_cli_test";
  std::filesystem::create_directories(dir);
  auto json_path = (dir / "out.json").string(), dot_path = (dir / "out.dot").string();
  EXPECT_EQ(run({"compute", "--in", data("k23.json"), "--out", json_path, "--dot", dot_path}).code, 0);
  std::ifstream in(json_path);
  EXPECT_EQ(nlohmann::json::parse(in)["distance"], 2);
  EXPECT_TRUE(std::filesystem::exists(dot_path));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ReduceDropsPendant) {
  CliRun r = run({"reduce", "--in", data("square.txt"), "--a", "a", "--b", "b"});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["vertices"].size(), 4u);
  EXPECT_TRUE(doc["vertex_map"]["p"].is_null());
  EXPECT_EQ(doc["collapsed"], false);
}

TEST(Cli, Limits) {
  CliRun r = run({"grid", "embed", "--dims", "2,2,2", "--limit", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("90"), std::string::npos);
  EXPECT_NE(r.err.find("limit=10"), std::string::npos);
  EXPECT_EQ(run({"construct", "hypercube", "5", "--check", "--limit", "8"}).code, 2);
  ::setenv("SPG_LIMIT", "5", 1);
  EXPECT_EQ(run({"compute", "--in", data("k23.json")}).code, 0);
  EXPECT_EQ(run({"construct", "complete", "6", "--check"}).code, 2);
  ::setenv("SPG_LIMIT", "zero", 1);
  EXPECT_EQ(run({"grid", "count", "--dims", "1,1"}).code, 2);
  ::unsetenv("SPG_LIMIT");
}

TEST(Cli, GridChecks) {
  EXPECT_EQ(run({"grid", "embed", "--dims", "2,2,1"}).code, 0);
  EXPECT_EQ(run({"grid", "staircase", "--n1", "3", "--n2", "2", "--check"}).code, 0);
  auto doc = nlohmann::json::parse(run({"grid", "staircase", "--n1", "2", "--n2", "2"}).out);
  EXPECT_EQ(doc["vertices"].size(), 6u);
  CliRun c = run({"cayley", "4", "--check"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("PASS", 0), 0u);
}

TEST(Cli, VerifyCorpora) {
  CliRun r = run({"verify", "all", "--corpus", "exhaustive:4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p3c4"), std::string::npos);
  CliRun d = run({"verify", "decomp", "--corpus", "random:20:8:3", "--index", "2", "--json"});
  EXPECT_EQ(d.code, 0);
  auto doc = nlohmann::json::parse(d.out);
  EXPECT_EQ(doc["rows"][0]["check"], "decomp");
  EXPECT_EQ(doc["failures"].size(), 0u);
  EXPECT_EQ(run({"verify", "noc5", "--index", "2"}).code, 2);
  CliRun f = run({"verify", "claw", "--corpus", "file:" + data("instances.json")});
  EXPECT_EQ(f.code, 0);
  CliRun s1 = run({"verify", "sums", "--one-sums", "4", "--two-sums", "8", "--unions", "2", "--seed", "5"});
  CliRun s2 = run({"verify", "sums", "--one-sums", "4", "--two-sums", "8", "--unions", "2", "--seed", "5"});
  EXPECT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_NE(s1.out.find("seed=5"), std::string::npos);
}

}  // namespace
}  // namespace spg
