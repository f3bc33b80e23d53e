#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aot/code_matrix.hpp"
#include "aot/particular.hpp"

namespace aot {

/// The canonical representative of a system's extensionality class:
/// duplicate columns removed, then the lexicographically least matrix over
/// all row and column permutations.
struct CanonicalMatrix {
  std::vector<Row> rows;
  /// canonical column j (0-based) came from source column column_order[j]
  /// (1-based, earliest occurrence in the source).
  std::vector<std::size_t> column_order;

  std::size_t object_count() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
  std::size_t state_count() const noexcept { return rows.size(); }
};

struct CollapsedSystem {
  ParticularObjectSystem system;
  /// 0-based source indices of the columns that survived, in source order.
  std::vector<std::size_t> kept;
  /// for each source column, the position in `kept` of its surviving copy.
  std::vector<std::size_t> representative;
};

/// Removes every later duplicate of an earlier column.
CollapsedSystem collapse_columns(const ParticularObjectSystem& o);
ParticularObjectSystem collapse(const ParticularObjectSystem& o);

CanonicalMatrix canonical_form(const ParticularObjectSystem& o);

/// Full canonical labeling of `o`: its canonical matrix together with, for
/// every source column, the 1-based canonical column it is abstracted to.
struct CanonicalLabeling {
  CanonicalMatrix canonical;
  std::vector<std::size_t> column_map;
  /// Image of a source row under collapse and the canonical column order.
  Row image(const Row& source_row) const;

 private:
  friend CanonicalLabeling canonical_labeling(const ParticularObjectSystem& o);
  std::vector<std::size_t> source_for_canonical_;  // 0-based source column per canonical column
};

CanonicalLabeling canonical_labeling(const ParticularObjectSystem& o);

/// Encodes atoms by their rank among the distinct atoms of `o`.
struct EncodedSystem {
  CodeMatrix matrix;
  std::vector<ParticularObject> alphabet;
};
EncodedSystem encode(const ParticularObjectSystem& o);
std::vector<Row> decode(const CodeMatrix& m, const std::vector<ParticularObject>& alphabet);

/// Compact JSON of the canonical rows, e.g. [["p1","p2"],["p2","p3"]].
std::string canonical_serialization(const std::vector<Row>& canonical_rows);

/// 64-bit FNV-1a of `canonical_serialization`, as 16 lowercase hex digits.
std::string canonical_id(const std::vector<Row>& canonical_rows);

}  // namespace aot
