#include "aot/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "aot/abstraction.hpp"
#include "aot/canonical.hpp"
#include "aot/error.hpp"
#include "aot/io.hpp"

namespace aot {
namespace {

using ordered_json = nlohmann::ordered_json;

CheckReport pass(std::string name, const Universe& u, std::optional<ordered_json> detail = std::nullopt) {
  return {std::move(name), Verdict::pass, std::move(detail), u.bounds()};
}

CheckReport fail(std::string name, const Universe& u, ordered_json witness) {
  return {std::move(name), Verdict::fail, std::move(witness), u.bounds()};
}

ordered_json row_json(const Row& row) {
  ordered_json out = ordered_json::array();
  for (const auto& atom : row) out.push_back(atom.token());
  return out;
}

ordered_json state_json(const Universe& u, const State& s) {
  return {{"label", label(u, s)}, {"space", s.system_id}, {"row", row_json(s.row)}};
}

bool well_formed(const ArbitraryObjectSystem& system) {
  if (system.matrix().empty() || system.object_count() == 0) return false;
  return std::all_of(system.matrix().begin(), system.matrix().end(),
                     [&](const Row& r) { return r.size() == system.object_count(); });
}

bool f_image_contains(const ArbitraryObjectSystem& system, const State& s) {
  return system.state_space_id() == s.system_id && system.find_row(s.row).has_value();
}

CheckReport particular_exists(const Universe& u) {
  if (u.particulars().empty()) return fail("particular_exists", u, {{"particulars", 0}});
  return pass("particular_exists", u, ordered_json{{"particulars", u.particulars().size()}});
}

// Particulars, objects and states are three distinct C++ types; the check
// reports the size of each realized domain.
CheckReport sorts_disjoint(const Universe& u, const std::vector<ValFact>& facts) {
  std::set<ParticularObject> values;
  std::set<ArbitraryObject> objects;
  std::set<State> states;
  for (const auto& fact : facts) {
    values.insert(fact.value);
    objects.insert(fact.object);
    states.insert(fact.state);
  }
  return pass("sorts_disjoint", u,
              ordered_json{{"particulars", values.size()}, {"objects", objects.size()}, {"states", states.size()}});
}

CheckReport val_partial_function(const Universe& u, const std::vector<ValFact>& facts) {
  std::map<std::pair<ArbitraryObject, State>, ParticularObject> seen;
  for (const auto& fact : facts) {
    if (!u.has_particular(fact.value)) {
      return fail("val_partial_function", u,
                  {{"reason", "value outside the particulars"},
                   {"object", label(fact.object)},
                   {"state", state_json(u, fact.state)},
                   {"value", fact.value.token()}});
    }
    auto [it, inserted] = seen.emplace(std::make_pair(fact.object, fact.state), fact.value);
    if (!inserted && it->second != fact.value) {
      return fail("val_partial_function", u,
                  {{"reason", "two values for one object in one state"},
                   {"object", label(fact.object)},
                   {"state", state_json(u, fact.state)},
                   {"values", {it->second.token(), fact.value.token()}}});
    }
  }
  return pass("val_partial_function", u);
}

CheckReport finite_state_spaces(const Universe& u, const std::vector<SystemPtr>& systems) {
  std::size_t largest = 0;
  for (const auto& system : systems) largest = std::max(largest, system->state_count());
  return pass("finite_state_spaces", u, ordered_json{{"largest_state_space", largest}});
}

CheckReport f_domain_and_range(const Universe& u, const std::vector<SystemPtr>& systems,
                               const std::vector<ValFact>& facts) {
  for (const auto& system : systems) {
    std::set<Row> rows;
    for (const auto& row : system->matrix()) {
      if (!rows.insert(row).second) {
        return fail("f_domain_and_range", u,
                    {{"reason", "F is not one-to-one on a system"}, {"system", system->id()}, {"row", row_json(row)}});
      }
    }
  }
  for (const auto& fact : facts) {
    const bool in_range = std::any_of(systems.begin(), systems.end(),
                                      [&](const SystemPtr& s) { return f_image_contains(*s, fact.state); });
    if (!in_range) {
      return fail("f_domain_and_range", u,
                  {{"reason", "state outside the range of F"}, {"state", state_json(u, fact.state)}});
    }
  }
  return pass("f_domain_and_range", u);
}

std::optional<ordered_json> comprehension_gap(const Universe& u, const std::vector<SystemPtr>& systems,
                                              const EnumerateOptions& options) {
  std::vector<ArbitraryObjectSystem> expected;
  try {
    expected = enumerate_systems(u.particulars(), u.bounds(), options);
  } catch (const Error& e) {
    return ordered_json{{"reason", "comprehension bounds infeasible"}, {"detail", e.detail()}};
  }
  std::set<std::string> registered;
  for (const auto& system : systems) registered.insert(system->id());
  std::size_t missing = 0;
  std::optional<ordered_json> example;
  for (const auto& system : expected) {
    if (registered.count(system.id())) continue;
    ++missing;
    if (!example) example = io::rows_to_json(system.matrix());
  }
  if (missing == 0) return std::nullopt;
  return ordered_json{{"reason", "system within bounds has no abstraction in the universe"},
                      {"missing", missing},
                      {"within_bounds", expected.size()},
                      {"example", *example}};
}

CheckReport abstraction(const Universe& u, const std::vector<SystemPtr>& systems,
                        const std::vector<ValFact>& facts, const EnumerateOptions& options) {
  for (const auto& system : systems) {
    if (!well_formed(*system)) {
      return fail("abstraction", u, {{"reason", "system matrix is empty or ragged"}, {"system", system->id()}});
    }
  }
  std::map<std::string, const ArbitraryObjectSystem*> by_id;
  for (const auto& system : systems) {
    auto [it, inserted] = by_id.emplace(system->id(), system.get());
    if (!inserted && it->second->matrix() != system->matrix()) {
      return fail("abstraction", u,
                  {{"reason", "one object sequence abstracted from two different systems"}, {"system", system->id()}});
    }
  }
  // Clause 1 holds when every cell of every matrix is a Val fact.
  std::set<ValFact> fact_set(facts.begin(), facts.end());
  for (const auto& system : systems) {
    for (const auto& state : system->states()) {
      for (std::size_t m = 1; m <= system->object_count(); ++m) {
        if (!fact_set.count({system->object(m), state, state.row[m - 1]})) {
          return fail("abstraction", u,
                      {{"reason", "missing value fact"}, {"object", label(system->object(m))}, {"state", state_json(u, state)}});
        }
      }
    }
  }
  for (const auto& fact : facts) {
    for (const auto& system : systems) {
      const bool own_object = fact.object.system_id == system->id();
      const bool own_state = f_image_contains(*system, fact.state);
      if (own_state && !own_object) {
        return fail("abstraction", u,
                    {{"reason", "object outside a system takes a value in one of its states"},
                     {"system", system->id()},
                     {"object", label(fact.object)},
                     {"state", state_json(u, fact.state)}});
      }
    }
    const bool home = std::any_of(systems.begin(), systems.end(), [&](const SystemPtr& s) {
      return s->id() == fact.object.system_id && f_image_contains(*s, fact.state);
    });
    if (!home) {
      return fail("abstraction", u,
                  {{"reason", "object takes a value outside the range of its system's F"},
                   {"object", label(fact.object)},
                   {"state", state_json(u, fact.state)}});
    }
  }
  if (u.bounds().unbounded()) {
    return pass("abstraction", u, ordered_json{{"comprehension", "not claimed (universe has no bounds)"}});
  }
  if (auto gap = comprehension_gap(u, systems, options)) return fail("abstraction", u, std::move(*gap));
  std::size_t outside = 0;
  for (const auto& system : systems) {
    if (system->object_count() > u.bounds().max_objects || system->state_count() > u.bounds().max_states) ++outside;
  }
  return pass("abstraction", u, ordered_json{{"comprehension", "saturated within bounds"}, {"outside_bounds", outside}});
}

CheckReport closure(const Universe& u, const std::vector<SystemPtr>& systems, const std::vector<ValFact>& facts) {
  for (const auto& fact : facts) {
    const bool belongs = std::any_of(systems.begin(), systems.end(), [&](const SystemPtr& s) {
      return s->id() == fact.object.system_id && fact.object.column_index >= 1 &&
             fact.object.column_index <= s->object_count();
    });
    if (!belongs) return fail("closure", u, {{"object", label(fact.object)}});
  }
  return pass("closure", u);
}

CheckReport uniform_state_space(const Universe& u, const std::vector<ValFact>& facts) {
  std::map<ArbitraryObject, std::set<State>> spaces;
  for (const auto& fact : facts) spaces[fact.object].insert(fact.state);
  std::map<std::string, std::pair<ArbitraryObject, const std::set<State>*>> first_of_system;
  for (const auto& [object, space] : spaces) {
    auto [it, inserted] = first_of_system.emplace(object.system_id, std::make_pair(object, &space));
    if (!inserted && *it->second.second != space) {
      return fail("uniform_state_space", u,
                  {{"system", object.system_id}, {"objects", {label(it->second.first), label(object)}}});
    }
  }
  return pass("uniform_state_space", u);
}

CheckReport internal_extensionality(const Universe& u, const std::vector<SystemPtr>& systems) {
  for (const auto& system : systems) {
    for (std::size_t i = 1; i <= system->object_count(); ++i) {
      for (std::size_t j = i + 1; j <= system->object_count(); ++j) {
        if (system->column(i) == system->column(j)) {
          return fail("internal_extensionality", u,
                      {{"system", system->id()},
                       {"objects", {label(system->object(i)), label(system->object(j))}},
                       {"column", row_json(system->column(i))}});
        }
      }
    }
  }
  return pass("internal_extensionality", u);
}

CheckReport external_extensionality(const Universe& u, const std::vector<SystemPtr>& systems) {
  std::map<std::vector<Row>, std::string> by_form;
  for (const auto& system : systems) {
    if (!well_formed(*system)) continue;
    auto form = canonical_form(validate_pos(system->matrix())).rows;
    auto [it, inserted] = by_form.emplace(std::move(form), system->id());
    if (!inserted && it->second != system->id()) {
      return fail("external_extensionality", u,
                  {{"reason", "two distinct systems are related by a state bijection"},
                   {"systems", {it->second, system->id()}},
                   {"canonical_rows", io::rows_to_json(it->first)}});
    }
  }
  return pass("external_extensionality", u);
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

ordered_json CheckReport::to_json() const {
  ordered_json out;
  out["check"] = check_name;
  out["verdict"] = passed() ? "pass" : "fail";
  out["witness"] = witness ? *witness : ordered_json(nullptr);
  out["bounds"] = {{"max_objects", bounds_used.max_objects}, {"max_states", bounds_used.max_states}};
  return out;
}

std::vector<CheckReport> check_axioms(const Universe& u, const EnumerateOptions& options) {
  const auto systems = u.systems();
  const auto facts = val_facts(u);
  return {
      particular_exists(u),
      sorts_disjoint(u, facts),
      val_partial_function(u, facts),
      finite_state_spaces(u, systems),
      f_domain_and_range(u, systems, facts),
      abstraction(u, systems, facts, options),
      closure(u, systems, facts),
      uniform_state_space(u, facts),
      internal_extensionality(u, systems),
      external_extensionality(u, systems),
  };
}

CheckReport check_lemma_isolation(const Universe& u) {
  std::map<State, std::set<std::string>> owners;
  for (const auto& system : u.systems()) {
    for (const auto& state : system->states()) owners[state].insert(system->id());
  }
  for (const auto& [state, ids] : owners) {
    if (ids.size() > 1) {
      return fail("isolation", u,
                  {{"state", state_json(u, state)}, {"systems", std::vector<std::string>(ids.begin(), ids.end())}});
    }
  }
  return pass("isolation", u);
}

CheckReport check_identity_criterion(const Universe& u) {
  std::map<ArbitraryObject, std::vector<std::pair<State, ParticularObject>>> profiles;
  for (const auto& fact : val_facts(u)) profiles[fact.object].emplace_back(fact.state, fact.value);
  std::map<std::vector<std::pair<State, ParticularObject>>, ArbitraryObject> owner;
  for (const auto& [object, profile] : profiles) {
    auto [it, inserted] = owner.emplace(profile, object);
    if (!inserted) {
      return fail("identity_criterion", u,
                  {{"reason", "distinct objects with identical value profiles"},
                   {"objects", {label(it->second), label(object)}}});
    }
  }
  return pass("identity_criterion", u, ordered_json{{"objects_compared", profiles.size()}});
}

bool equivalent_by_bijection(const ParticularObjectSystem& o1, const ParticularObjectSystem& o2) {
  const auto c1 = collapse(o1);
  const auto c2 = collapse(o2);
  if (c1.size() != c2.size() || c1.width() != c2.width()) return false;
  if (c1.size() > 9) throw Error(ErrorCode::infeasible_bounds, "bijection search limited to 9 rows");

  std::vector<Column> cols1, cols2;
  for (std::size_t c = 0; c < c1.width(); ++c) cols1.push_back(c1.column(c));
  for (std::size_t c = 0; c < c2.width(); ++c) cols2.push_back(c2.column(c));
  const std::set<Column> targets2(cols2.begin(), cols2.end());
  const std::set<Column> targets1(cols1.begin(), cols1.end());

  // f sends state i of o1 to state perm[i] of o2.
  auto perm = identity_permutation(c1.size());
  do {
    bool forward = std::all_of(cols1.begin(), cols1.end(), [&](const Column& col) {
      Column moved(col.size());
      for (std::size_t i = 0; i < col.size(); ++i) moved[perm[i]] = col[i];
      return targets2.count(moved) > 0;
    });
    bool backward = forward && std::all_of(cols2.begin(), cols2.end(), [&](const Column& col) {
      Column moved(col.size());
      for (std::size_t i = 0; i < col.size(); ++i) moved[i] = col[perm[i]];
      return targets1.count(moved) > 0;
    });
    if (forward && backward) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CheckReport check_collapse_lemma(const ParticularObjectSystem& o1, const ParticularObjectSystem& o2) {
  const bool by_systems_equal = systems_equal(o1, o2);
  const bool by_collapsed_forms = canonical_form(collapse(o1)).rows == canonical_form(collapse(o2)).rows;
  const bool by_bijection = equivalent_by_bijection(o1, o2);
  const bool literal = collapse(o1) == collapse(o2);
  ordered_json witness{{"systems_equal", by_systems_equal},
                       {"collapsed_canonical_forms_equal", by_collapsed_forms},
                       {"state_bijection_exists", by_bijection},
                       {"literal_collapse_equal", literal},
                       {"literal_reading_diverges", literal != by_systems_equal}};
  const bool agree = by_systems_equal == by_collapsed_forms && by_collapsed_forms == by_bijection;
  return {"collapse_lemma", agree ? Verdict::pass : Verdict::fail, std::move(witness), {}};
}

CheckReport check_max_states(const Universe& u, std::size_t m, std::size_t row_space_limit) {
  const std::size_t n = u.particulars().size();
  if (m == 0) throw Error(ErrorCode::infeasible_bounds, "m must be at least 1");
  std::size_t rows = 1;
  for (std::size_t i = 0; i < m; ++i) {
    rows *= n;
    if (rows > row_space_limit) {
      throw Error(ErrorCode::infeasible_bounds, "|P|^m exceeds the row-space limit of " +
                                                    std::to_string(row_space_limit));
    }
  }
  // Row r carries the big-endian base-n digits of r.
  auto digit = [&](std::size_t r, std::size_t c) {
    for (std::size_t k = c + 1; k < m; ++k) r /= n;
    return r % n;
  };
  std::size_t best = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rows); ++mask) {
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (count <= best) continue;
    bool distinct = true;
    for (std::size_t a = 0; a < m && distinct; ++a) {
      for (std::size_t b = a + 1; b < m && distinct; ++b) {
        bool same = true;
        for (std::size_t r = 0; r < rows && same; ++r) {
          if ((mask >> r) & 1U) same = digit(r, a) == digit(r, b);
        }
        distinct = !same;
      }
    }
    if (distinct) {
      best = count;
      best_mask = mask;
    }
  }
  ordered_json witness{{"particulars", n}, {"objects", m}, {"expected", rows}, {"observed", best}};
  if (best_mask != 0) {
    std::vector<Row> example;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!((best_mask >> r) & 1U)) continue;
      Row row;
      for (std::size_t c = 0; c < m; ++c) row.push_back(u.particulars()[digit(r, c)]);
      example.push_back(std::move(row));
    }
    witness["example"] = io::rows_to_json(example);
  } else {
    witness["reason"] = "no system has m distinct columns";
  }
  return {"max_states", best == rows ? Verdict::pass : Verdict::fail, std::move(witness), u.bounds()};
}

CheckReport check_categoricity(const Universe& u1, const Universe& u2) {
  if (u1.particulars() != u2.particulars()) {
    throw Error(ErrorCode::particulars_mismatch, "universes have different particulars");
  }
  std::set<std::string> ids1, ids2;
  for (const auto& s : u1.systems()) ids1.insert(s->id());
  for (const auto& s : u2.systems()) ids2.insert(s->id());
  std::vector<std::string> only1, only2;
  std::set_difference(ids1.begin(), ids1.end(), ids2.begin(), ids2.end(), std::back_inserter(only1));
  std::set_difference(ids2.begin(), ids2.end(), ids1.begin(), ids1.end(), std::back_inserter(only2));
  if (only1.empty() && only2.empty()) {
    return pass("categoricity", u1, ordered_json{{"systems", ids1.size()}});
  }
  return fail("categoricity", u1, {{"only_in_first", only1}, {"only_in_second", only2}});
}

std::vector<CheckReport> audit(const Universe& u, const EnumerateOptions& options) {
  auto reports = check_axioms(u, options);
  reports.push_back(check_lemma_isolation(u));
  reports.push_back(check_identity_criterion(u));
  return reports;
}

}  // namespace aot
