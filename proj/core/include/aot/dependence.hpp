#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "aot/universe.hpp"

namespace aot {

enum class DependenceMode { weak, strict };

/// b = `to` depends on a = `from` through `f`, a map defined on the value
/// range of a. `strict` records whether the biconditional form also holds,
/// i.e. whether f is injective on that range.
struct DependenceWitness {
  ArbitraryObject from;
  ArbitraryObject to;
  std::map<ParticularObject, ParticularObject> f;
  bool strict = false;
};

/// Throws DifferentSystems when a and b belong to different systems, and
/// UnknownObject when either is not in `u`.
std::optional<DependenceWitness> depends(const Universe& u, const ArbitraryObject& a,
                                         const ArbitraryObject& b,
                                         DependenceMode mode = DependenceMode::weak);

bool mutual_dependence(const Universe& u, const ArbitraryObject& a, const ArbitraryObject& b);

/// Neither depends on, nor is depended on by, another object of its system.
bool is_ur_object(const Universe& u, const ArbitraryObject& a);

struct DependenceGraph {
  std::string system_id;
  std::vector<ArbitraryObject> nodes;  // by column index
  /// (from, to) node positions; an edge a -> b means b depends on a.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::string to_dot() const;
  nlohmann::ordered_json to_json() const;
};

/// Throws UnknownSystem.
DependenceGraph dependence_graph(const Universe& u, std::string_view system_id);

}  // namespace aot
