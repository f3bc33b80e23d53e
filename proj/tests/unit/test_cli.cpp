#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace aot::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AOT_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, CountPairs) {
  const auto r = invoke({"count", "--p", "2", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,count\n1,3\n");
}

TEST(Cli, CountRawColumn) {
  const auto r = invoke({"count", "--p", "2", "--n", "2", "--raw", "--strategy", "dedup"});
  EXPECT_EQ(r.out, "n,count,blueprints\n1,3,3\n2,11,18\n");
}

TEST(Cli, AbstractReproducesValTable) {
  const auto r = invoke({"abstract", "--in", data("shifted_pair.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["objects"], 2);
  EXPECT_EQ(j["states"], 2);
  ASSERT_EQ(j["val"].size(), 4u);
  EXPECT_EQ(j["val"][0]["value"], "p1");
  EXPECT_EQ(j["val"][1]["value"], "p2");
  EXPECT_EQ(j["val"][2]["value"], "p2");
  EXPECT_EQ(j["val"][3]["value"], "p3");
}

TEST(Cli, CheckSingletonPasses) {
  const auto r = invoke({"check", "--universe", data("singleton.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CheckReportsFailure) {
  const auto r = invoke({"check", "--universe", data("unsaturated.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL abstraction"), std::string::npos);
  const auto fixed = invoke({"check", "--universe", data("unsaturated.json"), "--saturate", "--json"});
  EXPECT_EQ(fixed.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(fixed.out)["all_pass"].get<bool>());
}

TEST(Cli, EqualExitCodes) {
  EXPECT_EQ(invoke({"equal", data("single_row.json"), data("single_row_flipped.json")}).code, 0);
  EXPECT_EQ(invoke({"equal", data("swap.json"), data("single_row.json")}).code, 1);
}

TEST(Cli, CanonAndCollapse) {
  const auto canon = invoke({"canon", "--in", data("swap_reversed.json")});
  EXPECT_EQ(nlohmann::json::parse(canon.out)["canonical_id"], "681335ea6b4f7175");
  const auto csv = invoke({"collapse", "--in", data("swap.csv"), "--format", "csv"});
  EXPECT_EQ(csv.out, "0,1\n1,0\n");
}

TEST(Cli, DepsFormats) {
  const auto dot = invoke({"deps", "--in", data("swap.json")});
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("n0 -> n1"), std::string::npos);
  const auto json = invoke({"deps", "--universe", data("shifted_pair_universe.json"), "--format", "json"});
  EXPECT_EQ(json.code, 0) << json.err;
  EXPECT_EQ(invoke({"deps"}).code, 2);
}

TEST(Cli, EnumerateIsDeterministicAcrossJobs) {
  const auto one = invoke({"enumerate", "--p", "2", "--max-objects", "3", "--max-states", "3"});
  const auto three = invoke({"enumerate", "--p", "2", "--max-objects", "3", "--max-states", "3", "--jobs", "3",
                             "--strategy", "dedup"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
  const auto csv = invoke({"enumerate", "--particulars", "x", "--max-objects", "4", "--max-states", "4", "--format", "csv"});
  EXPECT_EQ(csv.out, "canonical_id,objects,states,rows\n" "f872c41b0d82cf23,1,1,x\n");
}

TEST(Cli, EvalVerdictsAndWitness) {
  const auto ok = invoke({"eval", "--model", data("shifted_pair_universe.json"), "--formulas", data("axioms.txt")});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out.find("false"), std::string::npos);
  const auto bad = invoke({"eval", "--model", data("shifted_pair_universe.json"), "--formula",
                           "forall a:A. forall s:S. Val(a,s,p2)", "--witness"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("counterexample: a="), std::string::npos);
  const auto bound = invoke({"eval", "--model", data("shifted_pair_universe.json"), "--formula", "P(x)", "--bind", "x=p3"});
  EXPECT_EQ(bound.code, 0) << bound.err;
  const auto sort = invoke({"eval", "--model", data("shifted_pair_universe.json"), "--formula", "Val(p,s,a)"});
  EXPECT_EQ(sort.code, 2);
  EXPECT_NE(sort.err.find("SortError"), std::string::npos);
}

TEST(Cli, DemoPga) {
  const auto r = invoke({"demo-pga", "--formula", "z = p1", "--var", "z"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["naive_substitution"]["sort_error"].get<bool>());
  EXPECT_FALSE(j["objects"][0]["every_state_value_satisfies"].get<bool>());
}

TEST(Cli, DemoDiagonal) {
  const auto r = invoke({"demo-diagonal", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3,3,3,"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"count", "--p", "2"}).code, 2);
  EXPECT_EQ(invoke({"abstract", "--in", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, InputErrorsNameTheFile) {
  const auto r = invoke({"abstract", "--in", data("axioms.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("axioms.txt"), std::string::npos);
}

}  // namespace
}  // namespace aot::cli
