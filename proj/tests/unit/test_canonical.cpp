#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "aot/canonical.hpp"
#include "aot/code_matrix.hpp"
#include "aot/enumerate.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace aot {
namespace {

ParticularObjectSystem permuted(const ParticularObjectSystem& o, const std::vector<std::size_t>& cols) {
  std::vector<Row> rows;
  for (const auto& r : o.rows()) {
    Row out;
    for (auto c : cols) out.push_back(r[c]);
    rows.push_back(std::move(out));
  }
  return validate_pos(std::move(rows));
}

TEST(Collapse, DropsLaterDuplicateColumns) {
  auto o = validate_pos({make_row({"0", "1", "0"}), make_row({"1", "1", "1"})});
  auto c = collapse_columns(o);
  EXPECT_EQ(c.system.width(), 2u);
  EXPECT_EQ(c.kept, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(c.representative, (std::vector<std::size_t>{0, 1, 0}));
}

TEST(Collapse, NeverMergesRows) {
  gen::Rng rng(5);
  const auto p = numbered_particulars(3);
  for (int i = 0; i < 300; ++i) {
    auto o = gen::random_pos(rng, p, 4, 5);
    EXPECT_EQ(collapse(o).size(), o.size());
    EXPECT_EQ(collapse(collapse(o)), collapse(o));
  }
}

TEST(CanonicalForm, MatchesBruteForceOracle) {
  gen::Rng rng(17);
  for (std::size_t n : {1, 2, 3}) {
    const auto p = numbered_particulars(n);
    for (int i = 0; i < 300; ++i) {
      auto o = gen::random_pos(rng, p, 4, 5);
      EXPECT_EQ(canonical_form(o).rows, oracle::canonical_rows(o));
    }
  }
}

TEST(CanonicalForm, WideSystemsUseGeneralPath) {
  gen::Rng rng(23);
  const auto p = numbered_particulars(20);
  for (int i = 0; i < 40; ++i) {
    auto o = gen::random_pos(rng, p, 5, 4);
    EXPECT_EQ(canonical_form(o).rows, oracle::canonical_rows(o));
  }
}

TEST(CanonicalForm, InvariantUnderColumnPermutation) {
  gen::Rng rng(29);
  const auto p = numbered_particulars(3);
  for (int i = 0; i < 200; ++i) {
    auto o = gen::random_pos(rng, p, 4, 5);
    std::vector<std::size_t> cols(o.width());
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    const auto form = canonical_form(o);
    EXPECT_EQ(canonical_form(permuted(o, cols)).rows, form.rows);
    EXPECT_EQ(canonical_id(form.rows), canonical_id(canonical_form(permuted(o, cols)).rows));
  }
}

TEST(CanonicalForm, ColumnOrderNamesSourceColumns) {
  gen::Rng rng(31);
  const auto p = numbered_particulars(3);
  for (int i = 0; i < 200; ++i) {
    auto o = gen::random_pos(rng, p, 4, 4);
    const auto form = canonical_form(o);
    std::vector<std::size_t> zero_based;
    for (auto c : form.column_order) zero_based.push_back(c - 1);
    EXPECT_EQ(permuted(o, zero_based).rows(), form.rows);
  }
}

TEST(CanonicalId, FixedValues) {
  // FNV-1a over the compact JSON, computed independently.
  EXPECT_EQ(canonical_id({make_row({"p1", "p2"}), make_row({"p2", "p3"})}), "f779208326f1f941");
  EXPECT_EQ(canonical_id({make_row({"0", "1"}), make_row({"1", "0"})}), "681335ea6b4f7175");
  EXPECT_EQ(canonical_id({make_row({"p"})}), "233293d99602e31b");
  EXPECT_EQ(canonical_serialization({make_row({"0", "1"})}), R"([["0","1"]])");
}

TEST(Encoding, RoundTrips) {
  gen::Rng rng(37);
  const auto p = numbered_particulars(4);
  for (int i = 0; i < 100; ++i) {
    auto o = gen::random_pos(rng, p, 3, 4);
    const auto e = encode(o);
    EXPECT_EQ(decode(e.matrix, e.alphabet), std::vector<Row>(o.rows().begin(), o.rows().end()));
  }
}

}  // namespace
}  // namespace aot
