#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "aot/canonical.hpp"
#include "aot/particular.hpp"
#include "aot/universe.hpp"

namespace aot {

/// F_o: the one-to-one assignment of a source system's rows to the states of
/// its abstraction, plus the column correspondence that recovers the ordered
/// sequence ⟨a_1, ..., a_l⟩ from the canonical column order.
struct StateMap {
  ParticularObjectSystem source;
  std::string system_id;
  /// source column (0-based) -> canonical column index (1-based). Duplicate
  /// source columns map to the same index.
  std::vector<std::size_t> column_map;
  /// in source row order
  std::vector<std::pair<Row, State>> assignment;

  /// Throws RowNotInSystem.
  const State& at(const Row& row) const;
  /// a_α for a 0-based source column α.
  ArbitraryObject object_for_column(std::size_t source_column) const;
};

struct Abstraction {
  SystemPtr system;
  StateMap states;
  CanonicalMatrix canonical;
};

/// The canonical system for `o`, unregistered.
ArbitraryObjectSystem make_system(const ParticularObjectSystem& o);

/// A(o): canonicalizes `o`, registers the result in `u` (idempotently) and
/// returns it with F_o. Throws UnknownValue for atoms outside u's particulars.
Abstraction abstract(Universe& u, const ParticularObjectSystem& o);

/// Canonical-form equality: whether o1 and o2 abstract to one and the same
/// arbitrary object system.
bool systems_equal(const ParticularObjectSystem& o1, const ParticularObjectSystem& o2);

/// F(o, x). Throws RowNotInSystem when x is not a row of o.
State f_map(Universe& u, const ParticularObjectSystem& o, const Row& x);

}  // namespace aot
