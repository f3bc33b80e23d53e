#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aot/particular.hpp"
#include "aot/universe.hpp"

namespace aot {

enum class EnumerationStrategy {
  /// Rows are added in increasing order and every prefix that is not the
  /// least matrix of its column-permutation class is pruned. Each canonical
  /// matrix is produced exactly once.
  orderly,
  /// Every row set is generated, collapsed, canonicalized and deduplicated.
  dedup,
};

struct EnumerateOptions {
  std::size_t jobs = 1;
  EnumerationStrategy strategy = EnumerationStrategy::orderly;
  /// Upper limit on `search_space`; larger requests throw InfeasibleBounds.
  double work_limit = 2e8;
};

/// Estimated work: sum over widths w ≤ max_objects of w! times the number of
/// row sets of size ≤ max_states drawn from the |P|^w possible rows.
double search_space(std::size_t particular_count, Bounds bounds);

/// Every canonical system over `particulars` with at most `bounds.max_objects`
/// objects and `bounds.max_states` states, each exactly once, ordered by
/// object count, then state count, then canonical matrix.
std::vector<ArbitraryObjectSystem> enumerate_systems(const std::vector<ParticularObject>& particulars,
                                                     Bounds bounds, const EnumerateOptions& options = {});

/// |C_P(n)|: canonical systems with at most n objects, states bounded by |P|^n.
std::uint64_t count_systems(const std::vector<ParticularObject>& particulars, std::size_t n,
                            const EnumerateOptions& options = {});

/// Raw blueprint count: nonempty row sets of width 1..n with at most
/// `max_states` rows, before any quotienting.
std::uint64_t count_blueprints(std::size_t particular_count, std::size_t n, std::size_t max_states);

/// Row sets over {"0", "1"} where row α carries "1" exactly at position α.
ParticularObjectSystem diagonal_system(std::size_t k);

/// Registers every system within u.bounds(). Throws InfeasibleBounds when
/// the universe is unbounded or the bounds exceed the work limit.
void saturate(Universe& u, const EnumerateOptions& options = {});

/// "0", "1", ..., "n-1".
std::vector<ParticularObject> numbered_particulars(std::size_t n);

}  // namespace aot
