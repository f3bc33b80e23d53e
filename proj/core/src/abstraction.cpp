#include "aot/abstraction.hpp"

#include <algorithm>

#include "aot/error.hpp"

namespace aot {

const State& StateMap::at(const Row& row) const {
  for (const auto& [source_row, state] : assignment) {
    if (source_row == row) return state;
  }
  throw Error(ErrorCode::row_not_in_system, "row is not an element of the source system");
}

ArbitraryObject StateMap::object_for_column(std::size_t source_column) const {
  return {system_id, column_map.at(source_column)};
}

ArbitraryObjectSystem make_system(const ParticularObjectSystem& o) {
  return ArbitraryObjectSystem::canonical(canonical_form(o).rows);
}

Abstraction abstract(Universe& u, const ParticularObjectSystem& o) {
  for (const auto& atom : o.values()) {
    if (!u.has_particular(atom)) {
      throw Error(ErrorCode::unknown_value, "'" + atom.token() + "' is not a particular of this universe");
    }
  }
  auto labeling = canonical_labeling(o);
  auto system = u.register_system(ArbitraryObjectSystem::canonical(labeling.canonical.rows));

  StateMap map{o, system->id(), labeling.column_map, {}};
  map.assignment.reserve(o.size());
  for (const auto& row : o.rows()) {
    map.assignment.emplace_back(row, State{system->state_space_id(), labeling.image(row)});
  }
  return {std::move(system), std::move(map), std::move(labeling.canonical)};
}

bool systems_equal(const ParticularObjectSystem& o1, const ParticularObjectSystem& o2) {
  return canonical_form(o1).rows == canonical_form(o2).rows;
}

State f_map(Universe& u, const ParticularObjectSystem& o, const Row& x) {
  if (!o.contains(x)) {
    throw Error(ErrorCode::row_not_in_system, "row is not an element of the source system");
  }
  return abstract(u, o).states.at(x);
}

}  // namespace aot
