#include "aot/particular.hpp"

#include <algorithm>

#include "aot/error.hpp"

namespace aot {

Row make_row(std::initializer_list<std::string_view> tokens) {
  Row row;
  row.reserve(tokens.size());
  for (auto token : tokens) row.emplace_back(std::string(token));
  return row;
}

std::vector<ParticularObject> make_particulars(std::initializer_list<std::string_view> tokens) {
  return make_row(tokens);
}

bool ParticularObjectSystem::contains(const Row& row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

Column ParticularObjectSystem::column(std::size_t index) const {
  Column out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.at(index));
  return out;
}

std::vector<ParticularObject> ParticularObjectSystem::values() const {
  std::vector<ParticularObject> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ParticularObjectSystem validate_pos(std::vector<Row> rows, ColumnPolicy policy) {
  if (rows.empty()) throw Error(ErrorCode::empty_system, "a particular object system needs at least one row");
  const std::size_t width = rows.front().size();
  if (width == 0) throw Error(ErrorCode::zero_width, "rows must have at least one entry");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw Error(ErrorCode::non_uniform_width,
                  "row " + std::to_string(i + 1) + " has width " + std::to_string(rows[i].size()) +
                      ", expected " + std::to_string(width));
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  ParticularObjectSystem system(std::move(rows), width);
  if (policy == ColumnPolicy::reject_duplicates) {
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = i + 1; j < width; ++j) {
        const bool same = std::all_of(system.rows().begin(), system.rows().end(),
                                      [&](const Row& r) { return r[i] == r[j]; });
        if (same) {
          throw Error(ErrorCode::duplicate_columns, "columns " + std::to_string(i + 1) + " and " +
                                                        std::to_string(j + 1) + " are identical");
        }
      }
    }
  }
  return system;
}

}  // namespace aot
