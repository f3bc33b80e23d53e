#pragma once

// Reference implementations kept deliberately naive: they share no code with
// the canonicalizer or the enumerator.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "aot/particular.hpp"

namespace aot::oracle {

inline std::vector<Row> rows_of(const ParticularObjectSystem& o) { return {o.rows().begin(), o.rows().end()}; }

inline std::vector<Column> distinct_columns(const std::vector<Row>& rows) {
  std::vector<Column> out;
  for (std::size_t c = 0; c < rows.front().size(); ++c) {
    Column col;
    for (const auto& r : rows) col.push_back(r[c]);
    if (std::find(out.begin(), out.end(), col) == out.end()) out.push_back(col);
  }
  return out;
}

/// Collapse, then the least row-sorted matrix over every column permutation.
inline std::vector<Row> canonical_rows(const ParticularObjectSystem& o) {
  const auto rows = rows_of(o);
  const auto cols = distinct_columns(rows);
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Row> best;
  do {
    std::vector<Row> m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (auto c : perm) m[r].push_back(cols[c][r]);
    }
    std::sort(m.begin(), m.end());
    if (best.empty() || m < best) best = m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Searches for a row bijection carrying the column set of one collapse onto
/// the column set of the other.
inline bool equivalent(const ParticularObjectSystem& o1, const ParticularObjectSystem& o2) {
  const auto r1 = rows_of(o1);
  const auto r2 = rows_of(o2);
  if (r1.size() != r2.size()) return false;
  const auto c1 = distinct_columns(r1);
  const auto c2 = distinct_columns(r2);
  if (c1.size() != c2.size()) return false;
  const std::set<Column> target(c2.begin(), c2.end());
  std::vector<std::size_t> sigma(r1.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::set<Column> image;
    for (const auto& col : c1) {
      Column moved(col.size());
      for (std::size_t i = 0; i < col.size(); ++i) moved[sigma[i]] = col[i];
      image.insert(moved);
    }
    if (image == target) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace aot::oracle
