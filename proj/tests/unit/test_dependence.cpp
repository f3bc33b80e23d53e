#include <gtest/gtest.h>

#include "aot/abstraction.hpp"
#include "aot/dependence.hpp"
#include "aot/enumerate.hpp"
#include "aot/error.hpp"
#include "generators.hpp"

namespace aot {
namespace {

TEST(Depends, SwapWitness) {
  Universe u(numbered_particulars(2));
  const auto a = abstract(u, validate_pos({make_row({"0", "1"}), make_row({"1", "0"})}));
  const auto a1 = a.states.object_for_column(0);
  const auto a2 = a.states.object_for_column(1);
  const auto w = depends(u, a1, a2, DependenceMode::strict);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->strict);
  const std::map<ParticularObject, ParticularObject> swap{{ParticularObject("0"), ParticularObject("1")},
                                                          {ParticularObject("1"), ParticularObject("0")}};
  EXPECT_EQ(w->f, swap);
  EXPECT_TRUE(mutual_dependence(u, a1, a2));
}

TEST(Depends, WeakButNotStrict) {
  // b takes one value while a takes two.
  Universe u(numbered_particulars(2));
  const auto a = abstract(u, validate_pos({make_row({"0", "0"}), make_row({"1", "0"})}));
  const auto x = a.states.object_for_column(0);
  const auto y = a.states.object_for_column(1);
  const auto weak = depends(u, x, y, DependenceMode::weak);
  ASSERT_TRUE(weak.has_value());
  EXPECT_FALSE(weak->strict);
  EXPECT_FALSE(depends(u, x, y, DependenceMode::strict).has_value());
  EXPECT_FALSE(depends(u, y, x).has_value());
  EXPECT_FALSE(mutual_dependence(u, x, y));
}

TEST(Depends, DifferentSystemsThrow) {
  Universe u(numbered_particulars(2));
  const auto a = abstract(u, validate_pos({make_row({"0"}), make_row({"1"})}));
  const auto b = abstract(u, validate_pos({make_row({"0", "1"})}));
  try {
    depends(u, a.system->object(1), b.system->object(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::different_systems);
  }
}

TEST(Depends, ReflexiveAndStrictImpliesWeak) {
  gen::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    auto u = gen::random_universe(rng, 3, 3, 4, 1);
    const auto sys = u.systems().front();
    for (const auto& a : sys->objects()) {
      EXPECT_TRUE(depends(u, a, a, DependenceMode::strict).has_value());
      for (const auto& b : sys->objects()) {
        if (depends(u, a, b, DependenceMode::strict)) {
          EXPECT_TRUE(depends(u, a, b).has_value());
        }
      }
    }
  }
}

TEST(UrObject, NaturalsSegment) {
  Universe u(numbered_particulars(10));
  std::vector<Row> rows;
  for (int n = 0; n < 10; ++n) rows.push_back(make_row({std::to_string(n)}));
  const auto a = abstract(u, validate_pos(rows));
  ASSERT_EQ(a.system->object_count(), 1u);
  const auto a0 = a.system->object(1);
  EXPECT_EQ(value_range(u, a0), numbered_particulars(10));
  EXPECT_TRUE(is_ur_object(u, a0));
}

TEST(Graph, DotAndJson) {
  Universe u(numbered_particulars(2));
  const auto a = abstract(u, validate_pos({make_row({"0", "0"}), make_row({"1", "0"})}));
  const auto g = dependence_graph(u, a.system->id());
  const auto dot = g.to_dot();
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("label=\"a1@" + id_prefix(a.system->id()) + "\""), std::string::npos);
  const auto j = g.to_json();
  EXPECT_EQ(j["format"], 1);
  EXPECT_EQ(j["nodes"].size(), 2u);
  EXPECT_THROW(dependence_graph(u, "0000000000000000"), Error);
}

}  // namespace
}  // namespace aot
