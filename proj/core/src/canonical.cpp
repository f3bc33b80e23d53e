#include "aot/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace aot {

CollapsedSystem collapse_columns(const ParticularObjectSystem& o) {
  std::vector<Column> columns;
  columns.reserve(o.width());
  for (std::size_t c = 0; c < o.width(); ++c) columns.push_back(o.column(c));

  std::vector<std::size_t> kept;
  std::vector<std::size_t> representative(o.width());
  for (std::size_t c = 0; c < o.width(); ++c) {
    auto it = std::find_if(kept.begin(), kept.end(),
                           [&](std::size_t k) { return columns[k] == columns[c]; });
    if (it == kept.end()) {
      representative[c] = kept.size();
      kept.push_back(c);
    } else {
      representative[c] = static_cast<std::size_t>(it - kept.begin());
    }
  }

  std::vector<Row> rows;
  rows.reserve(o.size());
  for (const auto& row : o.rows()) {
    Row projected;
    projected.reserve(kept.size());
    for (auto k : kept) projected.push_back(row[k]);
    rows.push_back(std::move(projected));
  }
  return {validate_pos(std::move(rows)), std::move(kept), std::move(representative)};
}

ParticularObjectSystem collapse(const ParticularObjectSystem& o) {
  return collapse_columns(o).system;
}

EncodedSystem encode(const ParticularObjectSystem& o) {
  EncodedSystem out;
  out.alphabet = o.values();
  out.matrix.rows = o.size();
  out.matrix.width = o.width();
  out.matrix.cells.reserve(o.size() * o.width());
  for (const auto& row : o.rows()) {
    for (const auto& atom : row) {
      auto it = std::lower_bound(out.alphabet.begin(), out.alphabet.end(), atom);
      out.matrix.cells.push_back(static_cast<std::uint32_t>(it - out.alphabet.begin()));
    }
  }
  return out;
}

std::vector<Row> decode(const CodeMatrix& m, const std::vector<ParticularObject>& alphabet) {
  std::vector<Row> rows(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    rows[r].reserve(m.width);
    for (std::size_t c = 0; c < m.width; ++c) rows[r].push_back(alphabet.at(m.at(r, c)));
  }
  return rows;
}

CanonicalLabeling canonical_labeling(const ParticularObjectSystem& o) {
  const auto collapsed = collapse_columns(o);
  const auto encoded = encode(collapsed.system);
  const auto minimal = minimize_over_permutations(encoded.matrix);

  CanonicalLabeling out;
  out.canonical.rows = decode(minimal.matrix, encoded.alphabet);
  std::vector<std::size_t> canonical_of_kept(collapsed.kept.size());
  for (std::size_t j = 0; j < minimal.permutation.size(); ++j) {
    const std::size_t kept_index = minimal.permutation[j];
    out.canonical.column_order.push_back(collapsed.kept[kept_index] + 1);
    out.source_for_canonical_.push_back(collapsed.kept[kept_index]);
    canonical_of_kept[kept_index] = j + 1;
  }
  out.column_map.reserve(o.width());
  for (std::size_t c = 0; c < o.width(); ++c) {
    out.column_map.push_back(canonical_of_kept[collapsed.representative[c]]);
  }
  return out;
}

Row CanonicalLabeling::image(const Row& source_row) const {
  Row out;
  out.reserve(source_for_canonical_.size());
  for (auto c : source_for_canonical_) out.push_back(source_row.at(c));
  return out;
}

CanonicalMatrix canonical_form(const ParticularObjectSystem& o) {
  return canonical_labeling(o).canonical;
}

std::string canonical_serialization(const std::vector<Row>& canonical_rows) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : canonical_rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& atom : row) cells.push_back(atom.token());
    rows.push_back(std::move(cells));
  }
  return rows.dump();
}

std::string canonical_id(const std::vector<Row>& canonical_rows) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_serialization(canonical_rows)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace aot
