#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homalg/cli.hpp"
#include "homalg/constructions.hpp"
#include "homalg/io.hpp"

using namespace homalg;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("homalg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"ac", path("missing.json"), "--side", "left"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"random", "--dim", "2", "--seed", "1", "--commutative", "--anticommutative"}).code, cli::kExitUsage);
}

TEST_F(CliTest, CayleyDicksonThenAc) {
  const std::string h = path("h.json");
  ASSERT_EQ(run({"cayley-dickson", "--levels", "2", "-o", h}).code, 0);
  const Result r = run({"ac", h, "--side", "two"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["ac"]["dim"], 1);
  const Result t = run({"twist-space", h, "--serial"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(json::parse(t.out)["dim"], 1);
}

TEST_F(CliTest, OneSidedAcWithoutUnityFails) {
  const std::string p = path("p.json");
  ASSERT_EQ(run({"poly", "--degree", "3", "-o", p}).code, 0);
  EXPECT_EQ(run({"ac", p, "--side", "left"}).code, cli::kExitUsage);
}

TEST_F(CliTest, AnalyzeIsDeterministic) {
  const std::string o = path("o.json");
  ASSERT_EQ(run({"cayley-dickson", "--levels", "3", "-o", o}).code, 0);
  const Result a = run({"analyze", o});
  const Result b = run({"analyze", o});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["failures"], 0);
}

TEST_F(CliTest, OppositeTwiceIsIdentity) {
  const std::string r = path("r.json"), o1 = path("o1.json"), o2 = path("o2.json");
  ASSERT_EQ(run({"random", "--dim", "3", "--seed", "5", "--left-unital", "-o", r}).code, 0);
  ASSERT_EQ(run({"opposite", r, "-o", o1}).code, 0);
  ASSERT_EQ(run({"opposite", o1, "-o", o2}).code, 0);
  EXPECT_EQ(read_document(o2).algebra, read_document(r).algebra);
}

TEST_F(CliTest, YauRecordsCriterion) {
  const std::string p = path("p.json");
  ASSERT_EQ(run({"poly", "--degree", "6", "--with-constants", "-o", p}).code, 0);
  const Result r = run({"yau", p, "--left-mult", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const AlgebraDocument doc = parse_document(r.out);
  ASSERT_TRUE(doc.twist.has_value());
  EXPECT_EQ(doc.meta["yau_criterion"]["holds"], true);
  EXPECT_EQ(run({"yau", p}).code, cli::kExitUsage);
}

TEST_F(CliTest, LeibnizReport) {
  const std::string l = path("l.json");
  write_document(document_of(Algebra(StructureTensor(Field::rational(), 2))), l);
  const Result r = run({"leibniz", l});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["left"]["holds"], true);
  EXPECT_EQ(j["hu_n"]["dim"], 2);
}

TEST_F(CliTest, CampaignOnEmptyCorpus) {
  const std::string report = path("camp.json");
  const Result r = run({"campaign", "--dir", dir_.string(), "--seeds", "200", "--report", report});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(report);
  const json j = json::parse(in);
  EXPECT_EQ(j["instance_count"], 200);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["prng"], "mt19937_64");
}

TEST_F(CliTest, CampaignCorpusParseErrorIsUsage) {
  std::ofstream(path("bad.json")) << "{ not json";
  EXPECT_EQ(run({"campaign", "--dir", dir_.string(), "--seeds", "0"}).code, cli::kExitUsage);
}
