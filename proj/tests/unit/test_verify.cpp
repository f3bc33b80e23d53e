#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "aot/abstraction.hpp"
#include "aot/enumerate.hpp"
#include "aot/error.hpp"
#include "aot/io.hpp"
#include "aot/verify.hpp"
#include "generators.hpp"

namespace aot {
namespace {

Universe load(const std::string& name) {
  std::ifstream in(std::string(AOT_TEST_DATA_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return io::parse_universe_json(s.str());
}

CheckReport named(const std::vector<CheckReport>& reports, const std::string& name) {
  for (const auto& r : reports) {
    if (r.check_name == name) return r;
  }
  throw std::runtime_error("no report " + name);
}

TEST(Axioms, SingletonPassesEverything) {
  const auto u = load("singleton.json");
  const auto reports = audit(u);
  EXPECT_EQ(reports.size(), 12u);
  for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(Axioms, ReportOrder) {
  const auto reports = check_axioms(load("shifted_pair_universe.json"));
  const std::vector<std::string> expected = {"particular_exists",  "sorts_disjoint",   "val_partial_function",
                                             "finite_state_spaces", "f_domain_and_range", "abstraction",
                                             "closure",             "uniform_state_space", "internal_extensionality",
                                             "external_extensionality"};
  ASSERT_EQ(reports.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(reports[i].check_name, expected[i]);
}

TEST(Axioms, UnboundedMakesNoComprehensionClaim) {
  const auto u = load("shifted_pair_universe.json");
  const auto r = named(check_axioms(u), "abstraction");
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.witness);
  EXPECT_NE((*r.witness)["comprehension"].get<std::string>().find("not claimed"), std::string::npos);
}

TEST(Axioms, MissingSystemBreaksComprehension) {
  const auto u = load("unsaturated.json");
  const auto r = named(check_axioms(u), "abstraction");
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ((*r.witness)["missing"], 2);
}

TEST(Axioms, SaturatedUniversesPass) {
  for (std::size_t p = 1; p <= 2; ++p) {
    Universe u(numbered_particulars(p), Bounds{2, 3});
    saturate(u);
    for (const auto& r : audit(u)) EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
}

TEST(Axioms, RandomBuiltUniversesPass) {
  gen::Rng rng(59);
  for (int i = 0; i < 60; ++i) {
    const auto u = gen::random_universe(rng, 3, 3, 4, 4);
    for (const auto& r : audit(u)) EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
}

TEST(Violations, DuplicateColumns) {
  Universe u(numbered_particulars(2));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("dup", {make_row({"0", "0"}), make_row({"1", "1"})}));
  const auto r = named(check_axioms(u), "internal_extensionality");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ((*r.witness)["system"], "dup");
  EXPECT_FALSE(check_identity_criterion(u).passed());
}

TEST(Violations, SharedStateSpace) {
  Universe u(numbered_particulars(2));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("left", {make_row({"0", "1"})}, "shared"));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("right", {make_row({"0", "1"}), make_row({"1", "1"})}, "shared"));
  const auto iso = check_lemma_isolation(u);
  EXPECT_FALSE(iso.passed());
  ASSERT_TRUE(iso.witness);
  EXPECT_EQ((*iso.witness)["systems"].size(), 2u);
  EXPECT_FALSE(named(check_axioms(u), "abstraction").passed());
}

TEST(Violations, ExtensionallyEqualSystems) {
  Universe u(numbered_particulars(2));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("first", {make_row({"0", "1"})}));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("second", {make_row({"1", "0"})}));
  const auto r = named(check_axioms(u), "external_extensionality");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ((*r.witness)["systems"], nlohmann::ordered_json({"first", "second"}));
}

TEST(Violations, DuplicateRowsBreakF) {
  Universe u(numbered_particulars(2));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("twice", {make_row({"0"}), make_row({"0"})}));
  EXPECT_FALSE(named(check_axioms(u), "f_domain_and_range").passed());
}

TEST(Violations, SharedIdMixesStateSpaces) {
  Universe u(numbered_particulars(2));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("same", {make_row({"0"})}));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("same", {make_row({"1", "0"})}));
  const auto reports = check_axioms(u);
  EXPECT_FALSE(named(reports, "uniform_state_space").passed());
  EXPECT_FALSE(named(reports, "abstraction").passed());
}

TEST(Violations, ValueOutsideParticulars) {
  Universe u(numbered_particulars(1));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("alien", {make_row({"7"})}));
  EXPECT_FALSE(named(check_axioms(u), "val_partial_function").passed());
}

TEST(Lemmas, FailingReportsCarryWitnesses) {
  Universe u(numbered_particulars(2));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("dup", {make_row({"0", "0"})}, "x"));
  u.insert_unchecked(ArbitraryObjectSystem::unchecked("other", {make_row({"0", "0"})}, "x"));
  for (const auto& r : audit(u)) {
    if (!r.passed()) {
      EXPECT_TRUE(r.witness.has_value()) << r.check_name;
    }
  }
}

TEST(CollapseLemma, LiteralReadingDiverges) {
  const auto r = check_collapse_lemma(validate_pos({make_row({"0", "1"})}), validate_pos({make_row({"1", "0"})}));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE((*r.witness)["systems_equal"].get<bool>());
  EXPECT_FALSE((*r.witness)["literal_collapse_equal"].get<bool>());
  EXPECT_TRUE((*r.witness)["literal_reading_diverges"].get<bool>());
}

TEST(CollapseLemma, DuplicateColumnsCollapse) {
  const auto r = check_collapse_lemma(validate_pos({make_row({"0", "0", "1"}), make_row({"1", "1", "1"})}),
                                      validate_pos({make_row({"0", "1"}), make_row({"1", "1"})}));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE((*r.witness)["systems_equal"].get<bool>());
}

TEST(MaxStates, MatchesPowers) {
  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cases = {
      {2, 1, 2}, {2, 2, 4}, {2, 3, 8}, {3, 2, 9}};
  for (const auto& [n, m, expected] : cases) {
    Universe u(numbered_particulars(n));
    const auto r = check_max_states(u, m);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ((*r.witness)["observed"], expected);
  }
}

TEST(MaxStates, SingleParticularHasNoWideSystem) {
  Universe u(numbered_particulars(1));
  EXPECT_TRUE(check_max_states(u, 1).passed());
  const auto r = check_max_states(u, 2);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ((*r.witness)["observed"], 0);
}

TEST(MaxStates, RowSpaceLimit) {
  Universe u(numbered_particulars(3));
  EXPECT_THROW(check_max_states(u, 3), Error);
}

TEST(Categoricity, IndependentSaturations) {
  Universe a(numbered_particulars(2), Bounds{2, 3});
  Universe b(numbered_particulars(2), Bounds{2, 3});
  saturate(a);
  EnumerateOptions two;
  two.jobs = 2;
  saturate(b, two);
  EXPECT_TRUE(check_categoricity(a, b).passed());
}

TEST(Categoricity, DifferentBoundsDiffer) {
  Universe a(numbered_particulars(2), Bounds{2, 3});
  Universe b(numbered_particulars(2), Bounds{2, 2});
  saturate(a);
  saturate(b);
  const auto r = check_categoricity(a, b);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE((*r.witness)["only_in_first"].empty());
  EXPECT_TRUE((*r.witness)["only_in_second"].empty());
}

TEST(Categoricity, ParticularsMustMatch) {
  Universe a(numbered_particulars(2));
  Universe b(numbered_particulars(3));
  try {
    check_categoricity(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::particulars_mismatch);
  }
}

}  // namespace
}  // namespace aot
