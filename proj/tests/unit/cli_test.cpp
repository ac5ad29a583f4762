#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

#include "bfc/cli/cli.hpp"
#include "bfc/core/families.hpp"
#include "bfc/core/io.hpp"

namespace bfc {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bfc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("bfc_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, MeasureJson) {
  const auto r = run({"measure", "--func", "mt:6", "--measures", "rdeg,deg", "--deterministic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LE(j["measures"][0]["result"]["value"].get<int>(), 3);
  EXPECT_EQ(j["measures"][1]["measure"], "deg");
  EXPECT_FALSE(j.contains("timestamp"));
  EXPECT_TRUE(nlohmann::json::parse(run({"measure", "--func", "and:2", "--measures", "deg"}).out).contains("timestamp"));
}

TEST(Cli, MeasureCsv) {
  const auto r = run({"measure", "--func", "parity:3", "--measures", "s,bs,cert", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "measure,value\ns,3\nbs,3\ncert,3\n");
}

TEST(Cli, MeasureFromFileIncludesWitness) {
  const auto path = temp_dir() / "f.json";
  write_file_atomic(path, function_to_json(threshold_fn(2, 3)).dump());
  const auto r = run({"measure", "--func", "file:" + path.string(), "--measures", "ndeg", "--deterministic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["measures"][0]["result"]["value"], 2);
  EXPECT_TRUE(j["measures"][0]["result"].contains("witness"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"measure", "--func", "bogus:3", "--measures", "deg"}).code, kExitParse);
  EXPECT_EQ(run({"measure", "--func", "and:3", "--measures", "deg,nope"}).code, kExitParse);
  EXPECT_EQ(run({"measure", "--func", "and:21", "--measures", "deg"}).code, kExitCap);
  const auto partial = run({"measure", "--func", "majn:4", "--measures", "rdeg,signdeg"});
  EXPECT_EQ(partial.code, kExitPartial);
  EXPECT_NE(partial.err.find("signdeg"), std::string::npos);
  EXPECT_EQ(run({"verify", "--claim", "nosuch"}).code, kExitParse);
  EXPECT_EQ(run({"verify"}).code, kExitParse);
  EXPECT_EQ(run({"verify", "--claim", "lemma:3.13", "--params", "sym[001100](x1,x2,x3,x4,x5)"}).code, kExitVerdictFailed);
  EXPECT_EQ(run({}).code, kExitParse);
  EXPECT_EQ(run({"measure", "--func", "and:2"}).code, kExitParse);
  EXPECT_EQ(run({"census", "--n", "11", "--count", "1", "--seed", "0"}).code, kExitCap);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--claim", "prop:4.1", "--params", "or:2,and:2", "--deterministic"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["all_hold"].get<bool>());
  const auto suite = run({"verify", "--all", "--max-size", "3", "--format", "csv"});
  EXPECT_EQ(suite.code, kExitOk);
  EXPECT_EQ(suite.out.find(",false,"), std::string::npos);
}

TEST(Cli, OutputFilesAreDeterministicAndAtomic) {
  const auto dir = temp_dir();
  const auto a = dir / "a.json", b = dir / "b.json", bad = dir / "bad.json";
  for (const auto& p : {a, b})
    ASSERT_EQ(run({"census", "--n", "4", "--count", "10", "--seed", "3", "--deterministic", "--out", p.string()}).code,
              kExitOk);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(nlohmann::json::parse(sa.str())["count"], 10);

  EXPECT_EQ(run({"measure", "--func", "majn:4", "--measures", "deg", "--out", bad.string()}).code, kExitPartial);
  EXPECT_FALSE(std::filesystem::exists(bad));
  for (const auto& e : std::filesystem::directory_iterator(dir))
    EXPECT_EQ(e.path().filename().string().find(".tmp"), std::string::npos);
}

TEST(Cli, WitnessAndReport) {
  const auto w = run({"witness", "--name", "andor", "--params", "2,2", "--deterministic"});
  ASSERT_EQ(w.code, kExitOk) << w.err;
  const auto j = nlohmann::json::parse(w.out);
  EXPECT_EQ(j["p"]["n"], 4);
  EXPECT_EQ(j["q"]["n"], 4);
  EXPECT_EQ(run({"witness", "--name", "andor", "--params", "2"}).code, kExitParse);
  EXPECT_EQ(run({"witness", "--name", "nope", "--params", "2"}).code, kExitParse);
  const auto r = run({"report", "--family", "sep5.2", "--n", "2", "--deterministic"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["rdeg"], 2);
  EXPECT_EQ(run({"report", "--family", "other", "--n", "2"}).code, kExitParse);
}

}  // namespace
}  // namespace bfc
