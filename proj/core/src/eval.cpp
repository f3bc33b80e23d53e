#include <algorithm>

#include "aot/error.hpp"
#include "aot/logic.hpp"

namespace aot {
namespace {

using ordered_json = nlohmann::ordered_json;

class Evaluator {
 public:
  Evaluator(const Model& m, const Assignment& env) : m_(m), env_(env) {}

  bool eval(const Formula& f) {
    const auto& t = f.terms();
    switch (f.kind()) {
      case Formula::Kind::val: {
        const auto a = resolve(t[0]);
        const auto s = resolve(t[1]);
        const auto p = resolve(t[2]);
        auto v = m_.value(std::get<ArbitraryObject>(a), std::get<State>(s));
        return v && *v == std::get<ParticularObject>(p);
      }
      case Formula::Kind::equals:
        return resolve(t[0]) == resolve(t[1]);
      case Formula::Kind::sort_test: {
        const auto e = resolve(t[0]);
        switch (f.tested_sort()) {
          case Sort::particular:
            return std::holds_alternative<ParticularObject>(e) && m_.is_value(std::get<ParticularObject>(e));
          case Sort::arbitrary:
            return std::holds_alternative<ArbitraryObject>(e) && m_.has_values(std::get<ArbitraryObject>(e));
          case Sort::state:
            return std::holds_alternative<State>(e) && m_.is_occupied(std::get<State>(e));
        }
        return false;
      }
      case Formula::Kind::negation:
        return !eval(f.child(0));
      case Formula::Kind::binary: {
        const bool lhs = eval(f.child(0));
        switch (f.connective()) {
          case Connective::conjunction: return lhs && eval(f.child(1));
          case Connective::disjunction: return lhs || eval(f.child(1));
          case Connective::implication: return !lhs || eval(f.child(1));
          case Connective::biconditional: return lhs == eval(f.child(1));
        }
        return false;
      }
      case Formula::Kind::quantified: {
        const bool universal = f.quantifier() == Quantifier::forall;
        bool result = universal;
        for_each_element(f.variable().sort, [&](Element e) {
          stack_.emplace_back(f.variable().name, std::move(e));
          const bool holds = eval(f.child(0));
          stack_.pop_back();
          if (holds != universal) {
            result = !universal;
            return false;
          }
          return true;
        });
        return result;
      }
    }
    return false;
  }

  // Calls visit(e) for every element of the sort until it returns false.
  template <typename Visit>
  void for_each_element(Sort sort, Visit&& visit) const {
    switch (sort) {
      case Sort::particular:
        for (const auto& p : m_.particulars()) {
          if (!visit(Element(p))) return;
        }
        return;
      case Sort::arbitrary:
        for (const auto& a : m_.objects()) {
          if (!visit(Element(a))) return;
        }
        return;
      case Sort::state:
        for (const auto& s : m_.states()) {
          if (!visit(Element(s))) return;
        }
        return;
    }
  }

  void push(const std::string& name, Element e) { stack_.emplace_back(name, std::move(e)); }
  void pop() { stack_.pop_back(); }

 private:
  Element resolve(const Term& t) const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->first == t.name) {
        if (sort_of(it->second) != t.sort) {
          throw Error(ErrorCode::sort_error, "variable " + t.name + " is bound at another sort");
        }
        return it->second;
      }
    }
    return m_.resolve(t, env_);
  }

  const Model& m_;
  const Assignment& env_;
  std::vector<std::pair<std::string, Element>> stack_;
};

bool search_counterexample(Evaluator& ev, const std::vector<Term>& vars, std::size_t i, const Formula& body,
                           Assignment& found) {
  if (i == vars.size()) return !ev.eval(body);
  bool hit = false;
  ev.for_each_element(vars[i].sort, [&](Element e) {
    ev.push(vars[i].name, e);
    hit = search_counterexample(ev, vars, i + 1, body, found);
    ev.pop();
    if (hit) found[vars[i].name] = e;
    return !hit;
  });
  return hit;
}

}  // namespace

Sort sort_of(const Element& e) {
  switch (e.index()) {
    case 0: return Sort::particular;
    case 1: return Sort::arbitrary;
    default: return Sort::state;
  }
}

std::string describe(const Universe& u, const Element& e) {
  if (const auto* p = std::get_if<ParticularObject>(&e)) return p->token();
  if (const auto* a = std::get_if<ArbitraryObject>(&e)) return label(*a);
  return label(u, std::get<State>(e));
}

Model::Model(const Universe& u)
    : universe_(&u), particulars_(u.particulars()), objects_(u.objects()), states_(u.states()) {
  for (const auto& fact : val_facts(u)) {
    val_.emplace(std::make_pair(fact.object, fact.state), fact.value);
    values_.insert(fact.value);
    valued_objects_.insert(fact.object);
    occupied_states_.insert(fact.state);
  }
}

std::optional<ParticularObject> Model::value(const ArbitraryObject& a, const State& s) const {
  auto it = val_.find({a, s});
  if (it == val_.end()) return std::nullopt;
  return it->second;
}

Element Model::resolve(const Term& term, const Assignment& env) const {
  auto it = env.find(term.name);
  if (it != env.end()) {
    if (sort_of(it->second) != term.sort) {
      throw Error(ErrorCode::sort_error, "binding for " + term.name + " has sort " +
                                             std::string(to_string(sort_of(it->second))) + ", expected " +
                                             std::string(to_string(term.sort)));
    }
    return it->second;
  }
  if (term.sort == Sort::particular) {
    ParticularObject p(term.name);
    if (std::binary_search(particulars_.begin(), particulars_.end(), p)) return p;
  }
  throw Error(ErrorCode::unbound_variable, "no value for free " + std::string(to_string(term.sort)) + " name '" +
                                               term.name + "'");
}

bool eval(const Model& m, const Formula& f, const Assignment& env) {
  Evaluator ev(m, env);
  return ev.eval(f);
}

bool eval(const Universe& u, const Formula& f, const Assignment& env) { return eval(Model(u), f, env); }

std::optional<Assignment> counterexample(const Model& m, const Formula& f, const Assignment& env) {
  std::vector<Term> vars;
  const Formula* body = &f;
  while (body->kind() == Formula::Kind::quantified && body->quantifier() == Quantifier::forall) {
    vars.push_back(body->variable());
    body = &body->child(0);
  }
  if (vars.empty()) return std::nullopt;
  Evaluator ev(m, env);
  Assignment found;
  if (!search_counterexample(ev, vars, 0, *body, found)) return std::nullopt;
  return found;
}

bool PgaReport::surrogates_agree() const {
  return std::all_of(objects.begin(), objects.end(), [](const PgaObjectReport& r) {
    return r.every_state_value_satisfies == r.every_range_value_satisfies;
  });
}

ordered_json PgaReport::to_json(const Universe& u) const {
  ordered_json per_object = ordered_json::array();
  for (const auto& r : objects) {
    ordered_json entry{{"object", label(r.object)},
                       {"every_state_value_satisfies", r.every_state_value_satisfies},
                       {"every_range_value_satisfies", r.every_range_value_satisfies},
                       {"agree", r.every_state_value_satisfies == r.every_range_value_satisfies}};
    entry["failing_state"] = r.failing_state ? ordered_json(label(u, *r.failing_state)) : ordered_json(nullptr);
    per_object.push_back(std::move(entry));
  }
  ordered_json out;
  out["system"] = system_id;
  out["variable"] = variable;
  out["formula"] = formula;
  out["naive_substitution"] = {{"sort_error", naive_is_sort_error}, {"detail", naive_substitution}};
  out["objects"] = std::move(per_object);
  out["surrogates_agree"] = surrogates_agree();
  out["collapse_formula"] = {{"formula", collapse_formula}, {"holds", collapse_formula_holds}};
  return out;
}

PgaReport check_pga(const Universe& u, std::string_view system_id, const Formula& phi,
                    std::optional<std::string> variable) {
  auto system = u.find_system(system_id);
  if (!system) throw Error(ErrorCode::unknown_system, "no system with id " + std::string(system_id));

  std::vector<std::string> candidates;
  for (const auto& t : phi.free_terms()) {
    if (t.sort != Sort::particular) {
      throw Error(ErrorCode::sort_error, "free name " + t.name + " of sort " + std::string(to_string(t.sort)) +
                                             "; phi must be a particular-sort formula");
    }
    if (variable ? t.name == *variable : !u.has_particular(ParticularObject(t.name))) candidates.push_back(t.name);
  }
  if (candidates.size() != 1) {
    throw Error(ErrorCode::sort_error, variable ? "phi has no free particular variable " + *variable
                                                : "phi must have exactly one free particular variable");
  }

  PgaReport report;
  report.system_id = system->id();
  report.variable = candidates.front();
  report.formula = print(phi);

  const Model m(u);
  for (const auto& a : system->objects()) {
    PgaObjectReport r{a, true, true, std::nullopt};
    for (const auto& s : m.states()) {
      auto v = m.value(a, s);
      if (v && !eval(m, phi, {{report.variable, *v}})) {
        r.every_state_value_satisfies = false;
        r.failing_state = s;
        break;
      }
    }
    for (const auto& p : value_range(u, a)) {
      if (!eval(m, phi, {{report.variable, p}})) {
        r.every_range_value_satisfies = false;
        break;
      }
    }
    report.objects.push_back(std::move(r));
  }

  const auto first = system->object(1);
  const Term object_term{label(first), Sort::arbitrary};
  try {
    const Formula naive = substitute(phi, report.variable, object_term);
    const bool holds = eval(m, naive, {{object_term.name, first}});
    report.naive_substitution = "well-sorted: " + print(naive) + " evaluates to " + (holds ? "true" : "false");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::sort_error) throw;
    report.naive_is_sort_error = true;
    report.naive_substitution = e.detail();
  }

  const auto& d = u.particulars().front().token();
  const std::string bound = d == "x" ? "x'" : "x";
  const Formula collapse = Formula::quantified(
      Quantifier::forall, {bound, Sort::particular},
      Formula::equals({bound, Sort::particular}, {d, Sort::particular}));
  report.collapse_formula = print(collapse);
  report.collapse_formula_holds = eval(m, collapse);
  return report;
}

}  // namespace aot
