#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace aot {

/// An opaque particular-object atom. Atoms carry no structure; they are
/// compared by their token under byte-wise lexicographic order, and that order
/// is the one every canonical form is built on.
class ParticularObject {
 public:
  ParticularObject() = default;
  explicit ParticularObject(std::string token) : token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

  friend bool operator==(const ParticularObject&, const ParticularObject&) = default;
  friend std::strong_ordering operator<=>(const ParticularObject& a,
                                          const ParticularObject& b) noexcept {
    return a.token_.compare(b.token_) <=> 0;
  }

 private:
  std::string token_;
};

using Row = std::vector<ParticularObject>;
using Column = std::vector<ParticularObject>;

Row make_row(std::initializer_list<std::string_view> tokens);
std::vector<ParticularObject> make_particulars(std::initializer_list<std::string_view> tokens);

enum class ColumnPolicy { allow_duplicates, reject_duplicates };

/// A finite, nonempty set of equal-width rows. Rows are kept sorted and
/// distinct, so two systems with the same row set compare equal regardless of
/// the order they were supplied in.
class ParticularObjectSystem {
 public:
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return rows_.size(); }

  bool contains(const Row& row) const;
  /// 0-based column, read top to bottom in row order.
  Column column(std::size_t index) const;
  /// Distinct atoms occurring anywhere in the system, sorted.
  std::vector<ParticularObject> values() const;

  friend bool operator==(const ParticularObjectSystem&, const ParticularObjectSystem&) = default;

 private:
  friend ParticularObjectSystem validate_pos(std::vector<Row> rows, ColumnPolicy policy);
  ParticularObjectSystem(std::vector<Row> rows, std::size_t width)
      : rows_(std::move(rows)), width_(width) {}

  std::vector<Row> rows_;
  std::size_t width_ = 0;
};

/// Validates a candidate row set. Duplicate rows are merged (rows form a set).
/// Throws EmptySystem, ZeroWidth, NonUniformWidth, or, under
/// ColumnPolicy::reject_duplicates, DuplicateColumns.
ParticularObjectSystem validate_pos(std::vector<Row> rows,
                                    ColumnPolicy policy = ColumnPolicy::allow_duplicates);

}  // namespace aot
