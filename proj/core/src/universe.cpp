#include "aot/universe.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "aot/canonical.hpp"
#include "aot/error.hpp"

namespace aot {

ArbitraryObjectSystem ArbitraryObjectSystem::canonical(std::vector<Row> canonical_rows) {
  auto id = canonical_id(canonical_rows);
  auto state_space_id = id;
  return {std::move(id), std::move(canonical_rows), std::move(state_space_id)};
}

ArbitraryObjectSystem ArbitraryObjectSystem::unchecked(std::string id, std::vector<Row> matrix,
                                                       std::string state_space_id) {
  if (state_space_id.empty()) state_space_id = id;
  return {std::move(id), std::move(matrix), std::move(state_space_id)};
}

ArbitraryObject ArbitraryObjectSystem::object(std::size_t column_index) const {
  if (column_index == 0 || column_index > object_count()) {
    throw Error(ErrorCode::unknown_object, "column index " + std::to_string(column_index) +
                                               " out of range for system " + id_);
  }
  return {id_, column_index};
}

State ArbitraryObjectSystem::state(std::size_t row_index) const {
  return {state_space_id_, matrix_.at(row_index)};
}

std::vector<ArbitraryObject> ArbitraryObjectSystem::objects() const {
  std::vector<ArbitraryObject> out;
  for (std::size_t m = 1; m <= object_count(); ++m) out.push_back({id_, m});
  return out;
}

std::vector<State> ArbitraryObjectSystem::states() const {
  std::vector<State> out;
  out.reserve(matrix_.size());
  for (const auto& row : matrix_) out.push_back({state_space_id_, row});
  return out;
}

Column ArbitraryObjectSystem::column(std::size_t column_index) const {
  Column out;
  out.reserve(matrix_.size());
  for (const auto& row : matrix_) out.push_back(row.at(column_index - 1));
  return out;
}

std::optional<std::size_t> ArbitraryObjectSystem::find_row(const Row& row) const {
  auto it = std::find(matrix_.begin(), matrix_.end(), row);
  if (it == matrix_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - matrix_.begin());
}

Universe::Universe(std::vector<ParticularObject> particulars, Bounds bounds)
    : particulars_(std::move(particulars)), bounds_(bounds) {
  std::sort(particulars_.begin(), particulars_.end());
  particulars_.erase(std::unique(particulars_.begin(), particulars_.end()), particulars_.end());
  if (particulars_.empty()) {
    throw Error(ErrorCode::empty_particulars, "a universe needs at least one particular object");
  }
}

Universe::Universe(const Universe& other)
    : particulars_(other.particulars_), bounds_(other.bounds_) {
  std::shared_lock lock(other.mutex_);
  systems_ = other.systems_;
}

Universe& Universe::operator=(const Universe& other) {
  if (this == &other) return *this;
  std::vector<SystemPtr> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.systems_;
  }
  std::unique_lock lock(mutex_);
  particulars_ = other.particulars_;
  bounds_ = other.bounds_;
  systems_ = std::move(copy);
  return *this;
}

Universe::Universe(Universe&& other) noexcept
    : particulars_(std::move(other.particulars_)),
      bounds_(other.bounds_),
      systems_(std::move(other.systems_)) {}

Universe& Universe::operator=(Universe&& other) noexcept {
  if (this == &other) return *this;
  std::unique_lock lock(mutex_);
  particulars_ = std::move(other.particulars_);
  bounds_ = other.bounds_;
  systems_ = std::move(other.systems_);
  return *this;
}

bool Universe::has_particular(const ParticularObject& p) const {
  return std::binary_search(particulars_.begin(), particulars_.end(), p);
}

SystemPtr Universe::register_system(ArbitraryObjectSystem system) {
  for (const auto& row : system.matrix()) {
    for (const auto& atom : row) {
      if (!has_particular(atom)) {
        throw Error(ErrorCode::unknown_value, "'" + atom.token() + "' is not a particular of this universe");
      }
    }
  }
  std::unique_lock lock(mutex_);
  for (const auto& existing : systems_) {
    if (existing->id() != system.id()) continue;
    if (existing->matrix() != system.matrix()) {
      throw Error(ErrorCode::format_error, "canonical id collision on " + system.id());
    }
    return existing;
  }
  systems_.push_back(std::make_shared<const ArbitraryObjectSystem>(std::move(system)));
  return systems_.back();
}

void Universe::insert_unchecked(ArbitraryObjectSystem system) {
  std::unique_lock lock(mutex_);
  systems_.push_back(std::make_shared<const ArbitraryObjectSystem>(std::move(system)));
}

std::vector<SystemPtr> Universe::systems() const {
  std::vector<SystemPtr> out;
  {
    std::shared_lock lock(mutex_);
    out = systems_;
  }
  std::stable_sort(out.begin(), out.end(), [](const SystemPtr& a, const SystemPtr& b) {
    return std::forward_as_tuple(a->object_count(), a->state_count(), a->matrix(), a->id()) <
           std::forward_as_tuple(b->object_count(), b->state_count(), b->matrix(), b->id());
  });
  return out;
}

SystemPtr Universe::find_system(std::string_view id) const {
  std::shared_lock lock(mutex_);
  for (const auto& s : systems_) {
    if (s->id() == id) return s;
  }
  return nullptr;
}

std::size_t Universe::system_count() const {
  std::shared_lock lock(mutex_);
  return systems_.size();
}

std::vector<ArbitraryObject> Universe::objects() const {
  std::vector<ArbitraryObject> out;
  for (const auto& s : systems()) {
    auto objects = s->objects();
    out.insert(out.end(), objects.begin(), objects.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<State> Universe::states() const {
  std::vector<State> out;
  for (const auto& s : systems()) {
    auto states = s->states();
    out.insert(out.end(), states.begin(), states.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

SystemPtr require_object(const Universe& u, const ArbitraryObject& a) {
  auto system = u.find_system(a.system_id);
  if (!system || a.column_index == 0 || a.column_index > system->object_count()) {
    throw Error(ErrorCode::unknown_object, label(a) + " is not an arbitrary object of this universe");
  }
  return system;
}

bool state_known(const Universe& u, const State& s) {
  for (const auto& system : u.systems()) {
    if (system->state_space_id() == s.system_id && system->find_row(s.row)) return true;
  }
  return false;
}

}  // namespace

std::optional<ParticularObject> val(const Universe& u, const ArbitraryObject& a, const State& s) {
  const auto system = require_object(u, a);
  if (!state_known(u, s)) {
    throw Error(ErrorCode::unknown_state, "state in space " + id_prefix(s.system_id) +
                                              " is not a state of this universe");
  }
  if (system->state_space_id() != s.system_id || !system->find_row(s.row)) return std::nullopt;
  return s.row.at(a.column_index - 1);
}

std::vector<State> state_space(const Universe& u, const ArbitraryObject& a) {
  return require_object(u, a)->states();
}

std::vector<ParticularObject> value_range(const Universe& u, const ArbitraryObject& a) {
  auto values = require_object(u, a)->column(a.column_index);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<ValFact> val_facts(const Universe& u) {
  std::vector<ValFact> facts;
  for (const auto& system : u.systems()) {
    for (const auto& row : system->matrix()) {
      State s{system->state_space_id(), row};
      for (std::size_t m = 1; m <= row.size(); ++m) {
        facts.push_back({{system->id(), m}, s, row[m - 1]});
      }
    }
  }
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
  return facts;
}

std::string id_prefix(std::string_view system_id) {
  return std::string(system_id.substr(0, 8));
}

std::string label(const ArbitraryObject& a) {
  return "a" + std::to_string(a.column_index) + "@" + id_prefix(a.system_id);
}

std::string label(const Universe& u, const State& s) {
  for (const auto& system : u.systems()) {
    if (system->state_space_id() != s.system_id) continue;
    if (auto index = system->find_row(s.row)) {
      return "s" + std::to_string(*index + 1) + "@" + id_prefix(s.system_id);
    }
  }
  return "s?@" + id_prefix(s.system_id);
}

}  // namespace aot
