#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "aot/particular.hpp"

namespace aot {

/// ⟨system, m⟩ with a 1-based column index into the canonical column order.
struct ArbitraryObject {
  std::string system_id;
  std::size_t column_index = 0;

  friend auto operator<=>(const ArbitraryObject&, const ArbitraryObject&) = default;
};

/// ⟨system, row⟩. `system_id` names the state space the row belongs to, which
/// for every system built through abstraction is the system's own id.
struct State {
  std::string system_id;
  Row row;

  friend auto operator<=>(const State&, const State&) = default;
};

/// A system of arbitrary objects: distinct columns over a shared set of rows.
/// Instances made through `canonical` hold a canonical matrix and a content
/// id; `unchecked` builds arbitrary (possibly invalid) systems so that the
/// audit checks can be exercised against constructed violations.
class ArbitraryObjectSystem {
 public:
  static ArbitraryObjectSystem canonical(std::vector<Row> canonical_rows);
  static ArbitraryObjectSystem unchecked(std::string id, std::vector<Row> matrix,
                                         std::string state_space_id = {});

  const std::string& id() const noexcept { return id_; }
  const std::string& state_space_id() const noexcept { return state_space_id_; }
  const std::vector<Row>& matrix() const noexcept { return matrix_; }

  std::size_t object_count() const noexcept { return matrix_.empty() ? 0 : matrix_.front().size(); }
  std::size_t state_count() const noexcept { return matrix_.size(); }

  ArbitraryObject object(std::size_t column_index) const;
  State state(std::size_t row_index) const;  // 0-based row
  std::vector<ArbitraryObject> objects() const;
  std::vector<State> states() const;
  /// Column values for a 1-based column index, in row order.
  Column column(std::size_t column_index) const;
  /// 0-based row index of `row`, if present.
  std::optional<std::size_t> find_row(const Row& row) const;

  friend bool operator==(const ArbitraryObjectSystem&, const ArbitraryObjectSystem&) = default;

 private:
  ArbitraryObjectSystem(std::string id, std::vector<Row> matrix, std::string state_space_id)
      : id_(std::move(id)), state_space_id_(std::move(state_space_id)), matrix_(std::move(matrix)) {}

  std::string id_;
  std::string state_space_id_;
  std::vector<Row> matrix_;
};

using SystemPtr = std::shared_ptr<const ArbitraryObjectSystem>;

/// Bounds for relativized comprehension. Zero in either field means the
/// universe makes no saturation claim.
struct Bounds {
  std::size_t max_objects = 0;
  std::size_t max_states = 0;

  bool unbounded() const noexcept { return max_objects == 0 || max_states == 0; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// A finite model: a nonempty particulars set and a family of registered
/// systems. Registration is the only mutation and is serialized internally, so
/// a Universe may be shared between threads that abstract concurrently.
class Universe {
 public:
  explicit Universe(std::vector<ParticularObject> particulars, Bounds bounds = {});
  Universe(const Universe& other);
  Universe& operator=(const Universe& other);
  Universe(Universe&& other) noexcept;
  Universe& operator=(Universe&& other) noexcept;
  ~Universe() = default;

  const std::vector<ParticularObject>& particulars() const noexcept { return particulars_; }
  bool has_particular(const ParticularObject& p) const;
  const Bounds& bounds() const noexcept { return bounds_; }

  /// Registers a canonical system; returns the already-registered instance if
  /// one with the same id exists. Throws UnknownValue for atoms outside the
  /// particulars.
  SystemPtr register_system(ArbitraryObjectSystem system);
  /// Appends without any validation or deduplication.
  void insert_unchecked(ArbitraryObjectSystem system);

  /// Snapshot ordered by object count, state count, matrix, then insertion.
  std::vector<SystemPtr> systems() const;
  SystemPtr find_system(std::string_view id) const;
  std::size_t system_count() const;

  std::vector<ArbitraryObject> objects() const;
  std::vector<State> states() const;

 private:
  std::vector<ParticularObject> particulars_;
  Bounds bounds_;
  mutable std::shared_mutex mutex_;
  std::vector<SystemPtr> systems_;
};

/// One Val(a, s, p) fact.
struct ValFact {
  ArbitraryObject object;
  State state;
  ParticularObject value;

  friend auto operator<=>(const ValFact&, const ValFact&) = default;
};

/// Val(a, s). Defined only when `a` and `s` come from the same system.
/// Throws UnknownObject / UnknownState for elements not in `u`.
std::optional<ParticularObject> val(const Universe& u, const ArbitraryObject& a, const State& s);
std::vector<State> state_space(const Universe& u, const ArbitraryObject& a);
std::vector<ParticularObject> value_range(const Universe& u, const ArbitraryObject& a);
/// Every Val fact contributed by every registered system, sorted.
std::vector<ValFact> val_facts(const Universe& u);

/// "a<index>@<first 8 chars of system id>".
std::string label(const ArbitraryObject& a);
/// "s<index>@<prefix>", with the 1-based position of the row in its system.
std::string label(const Universe& u, const State& s);
std::string id_prefix(std::string_view system_id);

}  // namespace aot
