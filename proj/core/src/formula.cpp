#include <string>

#include "aot/error.hpp"
#include "aot/logic.hpp"

namespace aot {
namespace {

void expect_sort(const Term& t, Sort expected, std::string_view where) {
  if (t.sort != expected) {
    throw Error(ErrorCode::sort_error, std::string(where) + " expects sort " + std::string(to_string(expected)) +
                                           ", got " + t.name + ":" + std::string(to_string(t.sort)));
  }
}

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::quantified:
      return 0;
    case Formula::Kind::binary:
      switch (f.connective()) {
        case Connective::biconditional: return 1;
        case Connective::implication: return 2;
        case Connective::disjunction: return 3;
        case Connective::conjunction: return 4;
      }
      return 0;
    case Formula::Kind::negation:
      return 5;
    default:
      return 6;
  }
}

std::string_view symbol(Connective op) {
  switch (op) {
    case Connective::conjunction: return " & ";
    case Connective::disjunction: return " | ";
    case Connective::implication: return " -> ";
    case Connective::biconditional: return " <-> ";
  }
  return "";
}

void render(const Formula& f, std::string& out);

void render_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render(f, out);
  if (wrap) out += ')';
}

void render(const Formula& f, std::string& out) {
  const auto& t = f.terms();
  switch (f.kind()) {
    case Formula::Kind::val:
      out += "Val(" + t[0].name + "," + t[1].name + "," + t[2].name + ")";
      return;
    case Formula::Kind::equals:
      out += t[0].name + " = " + t[1].name;
      return;
    case Formula::Kind::sort_test:
      out += std::string(to_string(f.tested_sort())) + "(" + t[0].name + ")";
      return;
    case Formula::Kind::negation: {
      const auto& body = f.child(0);
      const auto k = body.kind();
      out += '~';
      render_wrapped(body, k == Formula::Kind::binary || k == Formula::Kind::quantified || k == Formula::Kind::equals,
                     out);
      return;
    }
    case Formula::Kind::binary: {
      const int p = precedence(f);
      const bool right_assoc = f.connective() == Connective::implication;
      const auto& lhs = f.child(0);
      const auto& rhs = f.child(1);
      const int pl = precedence(lhs);
      const int pr = precedence(rhs);
      render_wrapped(lhs, pl == 0 || pl < p || (pl == p && right_assoc), out);
      out += symbol(f.connective());
      render_wrapped(rhs, pr == 0 || pr < p || (pr == p && !right_assoc), out);
      return;
    }
    case Formula::Kind::quantified:
      out += f.quantifier() == Quantifier::forall ? "forall " : "exists ";
      out += f.variable().name + ":" + std::string(to_string(f.variable().sort)) + ". ";
      render(f.child(0), out);
      return;
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<Term>& out) {
  switch (f.kind()) {
    case Formula::Kind::val:
    case Formula::Kind::equals:
    case Formula::Kind::sort_test:
      for (const auto& t : f.terms()) {
        if (!bound.count(t.name)) out.insert(t);
      }
      return;
    case Formula::Kind::negation:
    case Formula::Kind::binary:
      for (std::size_t i = 0; i < f.child_count(); ++i) collect_free(f.child(i), bound, out);
      return;
    case Formula::Kind::quantified: {
      const bool inserted = bound.insert(f.variable().name).second;
      collect_free(f.child(0), bound, out);
      if (inserted) bound.erase(f.variable().name);
      return;
    }
  }
}

}  // namespace

std::string_view to_string(Sort sort) {
  switch (sort) {
    case Sort::particular: return "P";
    case Sort::arbitrary: return "A";
    case Sort::state: return "S";
  }
  return "?";
}

Formula Formula::val(Term object, Term state, Term value) {
  expect_sort(object, Sort::arbitrary, "Val position 1");
  expect_sort(state, Sort::state, "Val position 2");
  expect_sort(value, Sort::particular, "Val position 3");
  Node n;
  n.kind = Kind::val;
  n.terms = {std::move(object), std::move(state), std::move(value)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::equals(Term lhs, Term rhs) {
  if (lhs.sort != rhs.sort) {
    throw Error(ErrorCode::sort_error, "equality between " + lhs.name + ":" + std::string(to_string(lhs.sort)) +
                                           " and " + rhs.name + ":" + std::string(to_string(rhs.sort)));
  }
  Node n;
  n.kind = Kind::equals;
  n.terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::sort_test(Sort sort, Term term) {
  Node n;
  n.kind = Kind::sort_test;
  n.sort = sort;
  n.terms = {std::move(term)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::negation(Formula body) {
  Node n;
  n.kind = Kind::negation;
  n.children = {std::move(body)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::binary(Connective op, Formula lhs, Formula rhs) {
  Node n;
  n.kind = Kind::binary;
  n.connective = op;
  n.children = {std::move(lhs), std::move(rhs)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::quantified(Quantifier q, Term variable, Formula body) {
  Node n;
  n.kind = Kind::quantified;
  n.quantifier = q;
  n.terms = {std::move(variable)};
  n.children = {std::move(body)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

std::set<Term> Formula::free_terms() const {
  std::set<std::string> bound;
  std::set<Term> out;
  collect_free(*this, bound, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.terms != y.terms || x.children != y.children) return false;
  switch (x.kind) {
    case Formula::Kind::sort_test: return x.sort == y.sort;
    case Formula::Kind::binary: return x.connective == y.connective;
    case Formula::Kind::quantified: return x.quantifier == y.quantifier;
    default: return true;
  }
}

std::string print(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& name, const Term& replacement) {
  auto swap = [&](const Term& t) { return t.name == name ? replacement : t; };
  const auto& t = f.terms();
  switch (f.kind()) {
    case Formula::Kind::val:
      return Formula::val(swap(t[0]), swap(t[1]), swap(t[2]));
    case Formula::Kind::equals:
      return Formula::equals(swap(t[0]), swap(t[1]));
    case Formula::Kind::sort_test:
      return Formula::sort_test(f.tested_sort(), swap(t[0]));
    case Formula::Kind::negation:
      return Formula::negation(substitute(f.child(0), name, replacement));
    case Formula::Kind::binary:
      return Formula::binary(f.connective(), substitute(f.child(0), name, replacement),
                             substitute(f.child(1), name, replacement));
    case Formula::Kind::quantified:
      if (f.variable().name == name) return f;
      return Formula::quantified(f.quantifier(), f.variable(), substitute(f.child(0), name, replacement));
  }
  return f;
}

}  // namespace aot
