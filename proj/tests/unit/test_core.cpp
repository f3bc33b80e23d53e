#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "aot/abstraction.hpp"
#include "aot/error.hpp"
#include "aot/io.hpp"
#include "aot/universe.hpp"
#include "generators.hpp"

namespace aot {
namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(AOT_TEST_DATA_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no aot::Error thrown";
  return ErrorCode::format_error;
}

TEST(ParticularSystem, RowsAreSortedAndDeduplicated) {
  auto o = validate_pos({make_row({"b", "a"}), make_row({"a", "b"}), make_row({"b", "a"})});
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o.rows()[0], make_row({"a", "b"}));
  EXPECT_EQ(o.width(), 2u);
  EXPECT_TRUE(o.contains(make_row({"b", "a"})));
  EXPECT_EQ(o.column(1), make_row({"b", "a"}));
}

TEST(ParticularSystem, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { validate_pos({}); }), ErrorCode::empty_system);
  EXPECT_EQ(code_of([] { validate_pos({Row{}}); }), ErrorCode::zero_width);
  EXPECT_EQ(code_of([] { validate_pos({make_row({"a"}), make_row({"a", "b"})}); }), ErrorCode::non_uniform_width);
  EXPECT_EQ(code_of([] { validate_pos({make_row({"a", "a"})}, ColumnPolicy::reject_duplicates); }),
            ErrorCode::duplicate_columns);
  EXPECT_NO_THROW(validate_pos({make_row({"a", "a"})}));
}

TEST(ParticularObject, OrderIsBytewise) {
  EXPECT_LT(ParticularObject("10"), ParticularObject("9"));
  EXPECT_LT(ParticularObject("B"), ParticularObject("a"));
}

TEST(Universe, RequiresParticulars) {
  EXPECT_EQ(code_of([] { Universe u({}); }), ErrorCode::empty_particulars);
}

TEST(Universe, RegistrationIsIdempotent) {
  Universe u(make_particulars({"0", "1"}));
  auto a = abstract(u, validate_pos({make_row({"0", "1"}), make_row({"1", "0"})}));
  auto b = abstract(u, validate_pos({make_row({"1", "0"}), make_row({"0", "1"})}));
  EXPECT_EQ(a.system, b.system);
  EXPECT_EQ(u.system_count(), 1u);
}

TEST(Universe, RejectsUnknownValues) {
  Universe u(make_particulars({"0"}));
  EXPECT_EQ(code_of([&] { abstract(u, validate_pos({make_row({"1"})})); }), ErrorCode::unknown_value);
}

TEST(Universe, ConcurrentRegistrationConverges) {
  Universe u(numbered_particulars(2));
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&u, t] {
      gen::Rng rng(7);
      for (int i = 0; i < 50; ++i) abstract(u, gen::random_pos(rng, u.particulars(), 2, 3));
      (void)t;
    });
  }
  for (auto& w : workers) w.join();
  Universe serial(numbered_particulars(2));
  gen::Rng rng(7);
  for (int i = 0; i < 50; ++i) abstract(serial, gen::random_pos(rng, serial.particulars(), 2, 3));
  EXPECT_EQ(u.system_count(), serial.system_count());
}

TEST(Val, UndefinedAcrossSystems) {
  Universe u(make_particulars({"0", "1"}));
  auto a = abstract(u, validate_pos({make_row({"0"}), make_row({"1"})}));
  auto b = abstract(u, validate_pos({make_row({"0", "1"})}));
  const auto obj = a.system->object(1);
  EXPECT_EQ(val(u, obj, a.system->state(0)), ParticularObject("0"));
  EXPECT_FALSE(val(u, obj, b.system->state(0)).has_value());
  EXPECT_EQ(code_of([&] { val(u, ArbitraryObject{a.system->id(), 5}, a.system->state(0)); }), ErrorCode::unknown_object);
  EXPECT_EQ(code_of([&] { val(u, obj, State{a.system->id(), make_row({"2"})}); }), ErrorCode::unknown_state);
}

TEST(Val, FactsCoverEveryCell) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto u = gen::random_universe(rng, 3, 3, 4, 3);
    std::size_t cells = 0;
    for (const auto& s : u.systems()) cells += s->object_count() * s->state_count();
    EXPECT_EQ(val_facts(u).size(), cells);
  }
}

TEST(Labels, UseIdPrefix) {
  EXPECT_EQ(label(ArbitraryObject{"f779208326f1f941", 2}), "a2@f7792083");
  EXPECT_EQ(id_prefix("f779208326f1f941"), "f7792083");
}

TEST(Io, JsonRoundTripIsBitExact) {
  const auto doc = io::parse_system_json(read("shifted_pair.json"));
  const auto text = io::to_json(doc);
  const auto again = io::parse_system_json(text);
  EXPECT_EQ(again.system, doc.system);
  EXPECT_EQ(again.values, doc.values);
  EXPECT_EQ(io::to_json(again), text);
}

TEST(Io, CsvAndJsonAgree) {
  const auto csv = io::parse_system(read("swap.csv"));
  const auto json = io::parse_system(read("swap.json"));
  EXPECT_EQ(csv.system, json.system);
  const auto again = io::parse_system_csv(io::to_csv(csv.system));
  EXPECT_EQ(again.system, csv.system);
}

TEST(Io, RandomRoundTrips) {
  gen::Rng rng(3);
  const auto p = numbered_particulars(3);
  for (int i = 0; i < 100; ++i) {
    const io::SystemDocument doc{p, gen::random_pos(rng, p, 4, 5)};
    EXPECT_EQ(io::parse_system_json(io::to_json(doc)).system, doc.system);
    EXPECT_EQ(io::parse_system_csv(io::to_csv(doc.system)).system, doc.system);
  }
}

TEST(Io, ErrorsCarryContext) {
  EXPECT_EQ(code_of([] { io::parse_system_json("{\"rows\": [[1,2],[3]]}"); }), ErrorCode::non_uniform_width);
  EXPECT_EQ(code_of([] { io::parse_system_json("{\"format\": 2, \"rows\": [[1]]}"); }), ErrorCode::format_error);
  EXPECT_EQ(code_of([] { io::parse_system_json("{\"values\": [0], \"rows\": [[1]]}"); }), ErrorCode::unknown_value);
  EXPECT_EQ(code_of([] { io::parse_system_json("{\"rows\": [[1,"); }), ErrorCode::format_error);
  try {
    io::parse_system_csv("0,1\n1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Io, UniverseFileIsReabstracted) {
  auto u = io::parse_universe_json(
      R"({"particulars": [0, 1], "systems": [[[1, 0], [0, 1]], {"rows": [[0, 1], [1, 0]]}, [[0, 0]]]})");
  EXPECT_EQ(u.system_count(), 2u);
  for (const auto& s : u.systems()) EXPECT_EQ(s->id(), s->state_space_id());
  const auto again = io::parse_universe_json(io::universe_to_json(u).dump());
  EXPECT_EQ(again.system_count(), u.system_count());
  EXPECT_EQ(code_of([] { io::parse_universe_json(R"({"particulars": [0], "systems": [[[1]]]})"); }),
            ErrorCode::unknown_value);
}

}  // namespace
}  // namespace aot
