#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aot {

/// A row-major matrix of small integer codes. Codes stand for atoms under an
/// order-preserving encoding, so lexicographic order on codes agrees with
/// lexicographic order on the atoms they encode.
struct CodeMatrix {
  std::size_t rows = 0;
  std::size_t width = 0;
  std::vector<std::uint32_t> cells;

  std::uint32_t at(std::size_t r, std::size_t c) const { return cells[r * width + c]; }

  friend bool operator==(const CodeMatrix&, const CodeMatrix&) = default;
  friend auto operator<=>(const CodeMatrix&, const CodeMatrix&) = default;
};

/// Result of minimizing a matrix over column and row permutations.
struct ColumnLabeling {
  /// canonical column j is source column `permutation[j]` (0-based).
  std::vector<std::size_t> permutation;
  /// the minimal matrix: columns permuted, rows sorted ascending.
  CodeMatrix matrix;
};

/// Exhaustive search over column permutations; for each, rows are sorted and
/// the matrix is compared row-major. Ties keep the lexicographically first
/// permutation. Rows are packed into 64-bit keys when they fit.
ColumnLabeling minimize_over_permutations(const CodeMatrix& m);

/// Sorts rows ascending in place.
void sort_rows(CodeMatrix& m);

/// Indices of the first occurrence of each distinct column, in order.
std::vector<std::size_t> distinct_columns(const CodeMatrix& m);

}  // namespace aot
