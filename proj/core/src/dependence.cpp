#include "aot/dependence.hpp"

#include <sstream>

#include "aot/error.hpp"

namespace aot {
namespace {

SystemPtr system_of(const Universe& u, const ArbitraryObject& a) {
  auto system = u.find_system(a.system_id);
  if (!system || a.column_index == 0 || a.column_index > system->object_count()) {
    throw Error(ErrorCode::unknown_object, label(a) + " is not an arbitrary object of this universe");
  }
  return system;
}

// The induced relation {(a(s), b(s))} restricted to one system's states.
std::optional<DependenceWitness> induced_map(const ArbitraryObjectSystem& system,
                                             const ArbitraryObject& a, const ArbitraryObject& b) {
  DependenceWitness witness{a, b, {}, true};
  for (const auto& row : system.matrix()) {
    const auto& from = row[a.column_index - 1];
    const auto& to = row[b.column_index - 1];
    auto [it, inserted] = witness.f.emplace(from, to);
    if (!inserted && it->second != to) return std::nullopt;
  }
  std::map<ParticularObject, ParticularObject> inverse;
  for (const auto& [p, image] : witness.f) {
    if (!inverse.emplace(image, p).second) {
      witness.strict = false;
      break;
    }
  }
  return witness;
}

}  // namespace

std::optional<DependenceWitness> depends(const Universe& u, const ArbitraryObject& a,
                                         const ArbitraryObject& b, DependenceMode mode) {
  const auto system = system_of(u, a);
  system_of(u, b);
  if (a.system_id != b.system_id) {
    throw Error(ErrorCode::different_systems,
                label(a) + " and " + label(b) + " belong to different systems and share no states");
  }
  auto witness = induced_map(*system, a, b);
  if (witness && mode == DependenceMode::strict && !witness->strict) return std::nullopt;
  return witness;
}

bool mutual_dependence(const Universe& u, const ArbitraryObject& a, const ArbitraryObject& b) {
  return depends(u, a, b).has_value() && depends(u, b, a).has_value();
}

bool is_ur_object(const Universe& u, const ArbitraryObject& a) {
  const auto system = system_of(u, a);
  for (const auto& other : system->objects()) {
    if (other == a) continue;
    if (depends(u, a, other) || depends(u, other, a)) return false;
  }
  return true;
}

DependenceGraph dependence_graph(const Universe& u, std::string_view system_id) {
  const auto system = u.find_system(system_id);
  if (!system) throw Error(ErrorCode::unknown_system, "no system with id " + std::string(system_id));
  DependenceGraph graph{system->id(), system->objects(), {}};
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    for (std::size_t j = 0; j < graph.nodes.size(); ++j) {
      if (induced_map(*system, graph.nodes[i], graph.nodes[j])) graph.edges.emplace_back(i, j);
    }
  }
  return graph;
}

std::string DependenceGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph dependence {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << label(nodes[i]) << "\"];\n";
  }
  for (const auto& [from, to] : edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json DependenceGraph::to_json() const {
  nlohmann::ordered_json out;
  out["format"] = 1;
  out["system_id"] = system_id;
  nlohmann::ordered_json node_list = nlohmann::ordered_json::array();
  for (const auto& node : nodes) node_list.push_back(label(node));
  out["nodes"] = std::move(node_list);
  nlohmann::ordered_json adjacency = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nlohmann::ordered_json targets = nlohmann::ordered_json::array();
    for (const auto& [from, to] : edges) {
      if (from == i) targets.push_back(to + 1);
    }
    adjacency.push_back(std::move(targets));
  }
  out["adjacency"] = std::move(adjacency);
  return out;
}

}  // namespace aot
