#include "aot/code_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace aot {
namespace {

unsigned bits_for(std::uint32_t max_code) {
  return std::max(1u, static_cast<unsigned>(std::bit_width(max_code)));
}

std::vector<std::vector<std::uint32_t>> row_vectors(const CodeMatrix& m) {
  std::vector<std::vector<std::uint32_t>> rows(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    rows[r].assign(m.cells.begin() + static_cast<std::ptrdiff_t>(r * m.width),
                   m.cells.begin() + static_cast<std::ptrdiff_t>((r + 1) * m.width));
  }
  return rows;
}

ColumnLabeling minimize_packed(const CodeMatrix& m, unsigned bits) {
  std::vector<std::size_t> perm(m.width);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> keys(m.rows);
  std::vector<std::uint64_t> best;
  std::vector<std::size_t> best_perm = perm;
  do {
    for (std::size_t r = 0; r < m.rows; ++r) {
      std::uint64_t key = 0;
      for (std::size_t c = 0; c < m.width; ++c) key = (key << bits) | m.at(r, perm[c]);
      keys[r] = key;
    }
    std::sort(keys.begin(), keys.end());
    if (best.empty() || keys < best) {
      best = keys;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ColumnLabeling out;
  out.permutation = std::move(best_perm);
  out.matrix.rows = m.rows;
  out.matrix.width = m.width;
  out.matrix.cells.resize(m.rows * m.width);
  const std::uint64_t mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::uint64_t key = best[r];
    for (std::size_t c = m.width; c-- > 0;) {
      out.matrix.cells[r * m.width + c] = static_cast<std::uint32_t>(key & mask);
      key >>= bits;
    }
  }
  return out;
}

ColumnLabeling minimize_general(const CodeMatrix& m) {
  std::vector<std::size_t> perm(m.width);
  std::iota(perm.begin(), perm.end(), 0);
  const auto rows = row_vectors(m);
  std::vector<std::vector<std::uint32_t>> candidate(m.rows, std::vector<std::uint32_t>(m.width));
  std::vector<std::vector<std::uint32_t>> best;
  std::vector<std::size_t> best_perm = perm;
  do {
    for (std::size_t r = 0; r < m.rows; ++r) {
      for (std::size_t c = 0; c < m.width; ++c) candidate[r][c] = rows[r][perm[c]];
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) {
      best = candidate;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ColumnLabeling out;
  out.permutation = std::move(best_perm);
  out.matrix.rows = m.rows;
  out.matrix.width = m.width;
  for (const auto& row : best) out.matrix.cells.insert(out.matrix.cells.end(), row.begin(), row.end());
  return out;
}

}  // namespace

ColumnLabeling minimize_over_permutations(const CodeMatrix& m) {
  if (m.rows == 0 || m.width == 0) return {{}, m};
  const std::uint32_t max_code = *std::max_element(m.cells.begin(), m.cells.end());
  const unsigned bits = bits_for(max_code);
  if (static_cast<std::size_t>(bits) * m.width <= 64) return minimize_packed(m, bits);
  return minimize_general(m);
}

void sort_rows(CodeMatrix& m) {
  auto rows = row_vectors(m);
  std::sort(rows.begin(), rows.end());
  m.cells.clear();
  for (const auto& row : rows) m.cells.insert(m.cells.end(), row.begin(), row.end());
}

std::vector<std::size_t> distinct_columns(const CodeMatrix& m) {
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < m.width; ++c) {
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      for (std::size_t r = 0; r < m.rows; ++r) {
        if (m.at(r, c) != m.at(r, k)) return false;
      }
      return true;
    });
    if (!duplicate) kept.push_back(c);
  }
  return kept;
}

}  // namespace aot
