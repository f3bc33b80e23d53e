#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "aot/universe.hpp"

namespace aot {

enum class Sort { particular, arbitrary, state };

/// "P", "A" or "S".
std::string_view to_string(Sort sort);

struct Term {
  std::string name;
  Sort sort = Sort::particular;

  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class Connective { conjunction, disjunction, implication, biconditional };
enum class Quantifier { forall, exists };

/// Immutable formula tree. The factories reject ill-sorted atoms with
/// SortError, so every Formula value is well-sorted.
class Formula {
 public:
  enum class Kind { val, equals, sort_test, negation, binary, quantified };

  static Formula val(Term object, Term state, Term value);
  static Formula equals(Term lhs, Term rhs);
  static Formula sort_test(Sort sort, Term term);
  static Formula negation(Formula body);
  static Formula binary(Connective op, Formula lhs, Formula rhs);
  static Formula quantified(Quantifier q, Term variable, Formula body);

  Kind kind() const noexcept { return node_->kind; }
  const std::vector<Term>& terms() const noexcept { return node_->terms; }
  Sort tested_sort() const noexcept { return node_->sort; }
  Connective connective() const noexcept { return node_->connective; }
  Quantifier quantifier() const noexcept { return node_->quantifier; }
  const Term& variable() const { return node_->terms.front(); }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }
  std::size_t child_count() const noexcept { return node_->children.size(); }

  std::set<Term> free_terms() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind = Kind::val;
    std::vector<Term> terms;
    Sort sort = Sort::particular;
    Connective connective = Connective::conjunction;
    Quantifier quantifier = Quantifier::forall;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct ParseOptions {
  /// Sorts for free names. Undeclared free names fall back to the naming
  /// convention (a, b, c -> A; p, q, r -> P; s, t, u -> S, optionally
  /// followed by digits and primes), then to inference from Val positions
  /// and equalities.
  std::map<std::string, Sort> free_sorts;
};

/// Grammar, loosest first: <-> (left), -> (right), |, &, ~, then atoms
/// Val(a,s,p), x = y, P(x), A(x), S(x). Quantifiers "forall x:A. f" and
/// "exists x:S. f" extend as far right as possible. Unicode connectives and
/// quantifier symbols are accepted. Throws SyntaxError (with byte offset) or
/// SortError.
Formula parse_formula(std::string_view text, const ParseOptions& options = {});

/// ASCII rendering with minimal parentheses; parse_formula inverts it.
std::string print(const Formula& f);

/// Replaces free occurrences of `name` by `replacement`, rebuilding through
/// the checked factories, so an ill-sorted result throws SortError.
Formula substitute(const Formula& f, const std::string& name, const Term& replacement);

using Element = std::variant<ParticularObject, ArbitraryObject, State>;
using Assignment = std::map<std::string, Element>;

Sort sort_of(const Element& e);
std::string describe(const Universe& u, const Element& e);

/// Snapshot of a universe's domains and Val facts for repeated evaluation.
class Model {
 public:
  explicit Model(const Universe& u);

  const Universe& universe() const noexcept { return *universe_; }
  const std::vector<ParticularObject>& particulars() const noexcept { return particulars_; }
  const std::vector<ArbitraryObject>& objects() const noexcept { return objects_; }
  const std::vector<State>& states() const noexcept { return states_; }

  std::optional<ParticularObject> value(const ArbitraryObject& a, const State& s) const;
  bool is_value(const ParticularObject& p) const { return values_.count(p) > 0; }
  bool has_values(const ArbitraryObject& a) const { return valued_objects_.count(a) > 0; }
  bool is_occupied(const State& s) const { return occupied_states_.count(s) > 0; }

  /// Resolves a free name: the assignment first, then a particular whose
  /// token equals the name. Throws UnboundVariable or SortError.
  Element resolve(const Term& term, const Assignment& env) const;

 private:
  const Universe* universe_;
  std::vector<ParticularObject> particulars_;
  std::vector<ArbitraryObject> objects_;
  std::vector<State> states_;
  std::map<std::pair<ArbitraryObject, State>, ParticularObject> val_;
  std::set<ParticularObject> values_;
  std::set<ArbitraryObject> valued_objects_;
  std::set<State> occupied_states_;
};

/// Classical satisfaction over the model's finite domains.
bool eval(const Model& m, const Formula& f, const Assignment& env = {});
bool eval(const Universe& u, const Formula& f, const Assignment& env = {});

/// For a formula of the form "forall x1 ... forall xn. body", an assignment
/// to x1..xn falsifying body, or nullopt if none exists or the formula has no
/// universal prefix.
std::optional<Assignment> counterexample(const Model& m, const Formula& f, const Assignment& env = {});

struct PgaObjectReport {
  ArbitraryObject object;
  bool every_state_value_satisfies = false;
  bool every_range_value_satisfies = false;
  std::optional<State> failing_state;
};

struct PgaReport {
  std::string system_id;
  std::string variable;
  std::string formula;
  std::string naive_substitution;
  bool naive_is_sort_error = false;
  std::vector<PgaObjectReport> objects;
  std::string collapse_formula;
  bool collapse_formula_holds = false;

  bool surrogates_agree() const;
  nlohmann::ordered_json to_json(const Universe& u) const;
};

/// Compares, per object of the system, "phi holds of the object's value in
/// every state" with "phi holds of every particular in its value range", and
/// records what happens when the object itself is substituted for the
/// variable. `variable` defaults to the single free particular-sort name of
/// phi that does not name a particular. Throws SortError if phi has free
/// names of another sort, UnknownSystem if the system is not registered.
PgaReport check_pga(const Universe& u, std::string_view system_id, const Formula& phi,
                    std::optional<std::string> variable = std::nullopt);

}  // namespace aot
