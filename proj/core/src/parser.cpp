#include <cctype>
#include <regex>
#include <string>

#include "aot/error.hpp"
#include "aot/logic.hpp"

namespace aot {
namespace {

enum class Tok { ident, lparen, rparen, comma, colon, dot, equals, negation, conj, disj, implies, iff, forall, exists, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t pos = 0;
};

[[noreturn]] void syntax_error(const std::string& message, std::size_t pos) {
  throw Error(ErrorCode::syntax_error, message + " at offset " + std::to_string(pos), pos);
}

bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || c == '\''; }

std::vector<Token> lex(std::string_view s) {
  static const std::pair<std::string_view, Tok> kSymbols[] = {
      {"<->", Tok::iff},   {"->", Tok::implies},      {"\xE2\x86\x94", Tok::iff},  {"\xE2\x86\x92", Tok::implies},
      {"\xC2\xAC", Tok::negation}, {"\xE2\x88\xA7", Tok::conj}, {"\xE2\x88\xA8", Tok::disj},
      {"\xE2\x88\x80", Tok::forall}, {"\xE2\x88\x83", Tok::exists},
      {"(", Tok::lparen},  {")", Tok::rparen},        {",", Tok::comma},           {":", Tok::colon},
      {".", Tok::dot},     {"=", Tok::equals},        {"~", Tok::negation},        {"!", Tok::negation},
      {"&", Tok::conj},    {"|", Tok::disj},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (ident_start(s[i])) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = word == "forall" ? Tok::forall : word == "exists" ? Tok::exists : Tok::ident;
      out.push_back({kind, std::move(word), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [text, kind] : kSymbols) {
      if (s.substr(i, text.size()) == text) {
        out.push_back({kind, std::string(text), i});
        i += text.size();
        matched = true;
        break;
      }
    }
    if (!matched) syntax_error("unexpected character '" + std::string(1, s[i]) + "'", i);
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

bool reserved(const std::string& name) {
  return name == "Val" || name == "P" || name == "A" || name == "S";
}

std::optional<Sort> sort_named(const std::string& name) {
  if (name == "P") return Sort::particular;
  if (name == "A") return Sort::arbitrary;
  if (name == "S") return Sort::state;
  return std::nullopt;
}

struct Name {
  std::string text;
  std::size_t pos = 0;
};

// Parse tree before sort resolution.
struct Raw {
  Formula::Kind kind = Formula::Kind::val;
  std::vector<Name> names;
  Sort sort = Sort::particular;
  Connective connective = Connective::conjunction;
  Quantifier quantifier = Quantifier::forall;
  std::vector<Raw> children;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Raw parse() {
    Raw f = biconditional();
    if (peek().kind != Tok::end) syntax_error("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  Token take() { return tokens_[i_++]; }

  Token expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      syntax_error("expected " + std::string(what) + (peek().kind == Tok::end ? " before end of input" : ", got '" + peek().text + "'"),
                   peek().pos);
    }
    return take();
  }

  static Raw binary(Connective op, Raw lhs, Raw rhs) {
    Raw r;
    r.kind = Formula::Kind::binary;
    r.connective = op;
    r.children = {std::move(lhs), std::move(rhs)};
    return r;
  }

  Raw biconditional() {
    Raw lhs = implication();
    while (peek().kind == Tok::iff) {
      take();
      lhs = binary(Connective::biconditional, std::move(lhs), implication());
    }
    return lhs;
  }

  Raw implication() {
    Raw lhs = disjunction();
    if (peek().kind != Tok::implies) return lhs;
    take();
    return binary(Connective::implication, std::move(lhs), implication());
  }

  Raw disjunction() {
    Raw lhs = conjunction();
    while (peek().kind == Tok::disj) {
      take();
      lhs = binary(Connective::disjunction, std::move(lhs), conjunction());
    }
    return lhs;
  }

  Raw conjunction() {
    Raw lhs = unary();
    while (peek().kind == Tok::conj) {
      take();
      lhs = binary(Connective::conjunction, std::move(lhs), unary());
    }
    return lhs;
  }

  Raw unary() {
    if (peek().kind == Tok::negation) {
      take();
      Raw r;
      r.kind = Formula::Kind::negation;
      r.children = {unary()};
      return r;
    }
    if (peek().kind == Tok::forall || peek().kind == Tok::exists) return quantified();
    return primary();
  }

  Raw quantified() {
    Raw r;
    r.kind = Formula::Kind::quantified;
    r.quantifier = take().kind == Tok::forall ? Quantifier::forall : Quantifier::exists;
    r.names = {variable()};
    expect(Tok::colon, "':'");
    const Token sort = expect(Tok::ident, "sort P, A or S");
    auto s = sort_named(sort.text);
    if (!s) syntax_error("unknown sort '" + sort.text + "'", sort.pos);
    r.sort = *s;
    expect(Tok::dot, "'.'");
    r.children = {biconditional()};
    return r;
  }

  Name variable() {
    const Token t = expect(Tok::ident, "identifier");
    if (reserved(t.text)) syntax_error("'" + t.text + "' is reserved", t.pos);
    return {t.text, t.pos};
  }

  Raw primary() {
    if (peek().kind == Tok::lparen) {
      take();
      Raw inner = biconditional();
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (peek().kind != Tok::ident) {
      syntax_error(peek().kind == Tok::end ? "unexpected end of input" : "unexpected '" + peek().text + "'",
                   peek().pos);
    }
    const Token head = peek();
    Raw r;
    if (head.text == "Val") {
      take();
      expect(Tok::lparen, "'('");
      r.kind = Formula::Kind::val;
      r.names.push_back(variable());
      expect(Tok::comma, "','");
      r.names.push_back(variable());
      expect(Tok::comma, "','");
      r.names.push_back(variable());
      expect(Tok::rparen, "')'");
      return r;
    }
    if (auto s = sort_named(head.text)) {
      take();
      expect(Tok::lparen, "'('");
      r.kind = Formula::Kind::sort_test;
      r.sort = *s;
      r.names = {variable()};
      expect(Tok::rparen, "')'");
      return r;
    }
    r.kind = Formula::Kind::equals;
    r.names.push_back(variable());
    expect(Tok::equals, "'='");
    r.names.push_back(variable());
    return r;
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
};

std::optional<Sort> conventional_sort(const std::string& name) {
  static const std::regex arbitrary("^[abc][0-9']*$");
  static const std::regex particular("^[pqr][0-9']*$");
  static const std::regex state("^[stu][0-9']*$");
  if (std::regex_match(name, arbitrary)) return Sort::arbitrary;
  if (std::regex_match(name, particular)) return Sort::particular;
  if (std::regex_match(name, state)) return Sort::state;
  return std::nullopt;
}

using Scope = std::vector<std::pair<std::string, Sort>>;

std::optional<Sort> lookup(const Scope& scope, const std::map<std::string, Sort>& free, const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (it->first == name) return it->second;
  }
  auto f = free.find(name);
  if (f != free.end()) return f->second;
  return std::nullopt;
}

bool is_free(const Scope& scope, const std::string& name) {
  for (const auto& entry : scope) {
    if (entry.first == name) return false;
  }
  return true;
}

// One inference pass; returns true if any free name gained a sort.
bool infer(const Raw& r, Scope& scope, std::map<std::string, Sort>& free, bool use_sort_tests) {
  bool changed = false;
  auto assign = [&](const Name& n, Sort s) {
    if (is_free(scope, n.text) && !free.count(n.text)) {
      free.emplace(n.text, s);
      changed = true;
    }
  };
  switch (r.kind) {
    case Formula::Kind::val:
      assign(r.names[0], Sort::arbitrary);
      assign(r.names[1], Sort::state);
      assign(r.names[2], Sort::particular);
      break;
    case Formula::Kind::equals: {
      auto l = lookup(scope, free, r.names[0].text);
      auto rr = lookup(scope, free, r.names[1].text);
      if (l && !rr) assign(r.names[1], *l);
      if (rr && !l) assign(r.names[0], *rr);
      break;
    }
    case Formula::Kind::sort_test:
      if (use_sort_tests) assign(r.names[0], r.sort);
      break;
    case Formula::Kind::quantified:
      scope.emplace_back(r.names[0].text, r.sort);
      changed |= infer(r.children[0], scope, free, use_sort_tests);
      scope.pop_back();
      break;
    default:
      for (const auto& c : r.children) changed |= infer(c, scope, free, use_sort_tests);
  }
  return changed;
}

void seed(const Raw& r, Scope& scope, std::map<std::string, Sort>& free) {
  if (r.kind == Formula::Kind::quantified) {
    scope.emplace_back(r.names[0].text, r.sort);
    seed(r.children[0], scope, free);
    scope.pop_back();
    return;
  }
  for (const auto& n : r.names) {
    if (!is_free(scope, n.text) || free.count(n.text)) continue;
    if (auto s = conventional_sort(n.text)) free.emplace(n.text, *s);
  }
  for (const auto& c : r.children) seed(c, scope, free);
}

Formula build(const Raw& r, Scope& scope, const std::map<std::string, Sort>& free) {
  auto term = [&](const Name& n) {
    auto s = lookup(scope, free, n.text);
    if (!s) throw Error(ErrorCode::sort_error, "cannot determine the sort of '" + n.text + "'", n.pos);
    return Term{n.text, *s};
  };
  switch (r.kind) {
    case Formula::Kind::val:
      return Formula::val(term(r.names[0]), term(r.names[1]), term(r.names[2]));
    case Formula::Kind::equals:
      return Formula::equals(term(r.names[0]), term(r.names[1]));
    case Formula::Kind::sort_test:
      return Formula::sort_test(r.sort, term(r.names[0]));
    case Formula::Kind::negation:
      return Formula::negation(build(r.children[0], scope, free));
    case Formula::Kind::binary:
      return Formula::binary(r.connective, build(r.children[0], scope, free), build(r.children[1], scope, free));
    case Formula::Kind::quantified: {
      scope.emplace_back(r.names[0].text, r.sort);
      Formula body = build(r.children[0], scope, free);
      scope.pop_back();
      return Formula::quantified(r.quantifier, Term{r.names[0].text, r.sort}, std::move(body));
    }
  }
  throw Error(ErrorCode::syntax_error, "unreachable");
}

}  // namespace

Formula parse_formula(std::string_view text, const ParseOptions& options) {
  const Raw raw = Parser(lex(text)).parse();
  std::map<std::string, Sort> free = options.free_sorts;
  Scope scope;
  seed(raw, scope, free);
  while (infer(raw, scope, free, false)) {
  }
  while (infer(raw, scope, free, true)) {
  }
  return build(raw, scope, free);
}

}  // namespace aot
