#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aot/abstraction.hpp"
#include "aot/canonical.hpp"
#include "aot/dependence.hpp"
#include "aot/enumerate.hpp"
#include "aot/error.hpp"
#include "aot/io.hpp"
#include "aot/logic.hpp"
#include "aot/verify.hpp"

namespace aot::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::format_error, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Reruns `load` so errors carry the file name.
template <typename Load>
auto with_file_context(const std::string& path, Load&& load) {
  const std::string text = read_file(path);
  try {
    return load(text);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail(), e.position());
  }
}

io::SystemDocument load_system(const std::string& path) {
  return with_file_context(path, [](const std::string& text) { return io::parse_system(text); });
}

Universe load_universe(const std::string& path) {
  return with_file_context(path, [](const std::string& text) { return io::parse_universe_json(text); });
}

Universe shifted_pair_universe() {
  Universe u(make_particulars({"p1", "p2", "p3"}));
  abstract(u, validate_pos({make_row({"p1", "p2"}), make_row({"p2", "p3"})}));
  return u;
}

std::vector<ParticularObject> particulars_from(std::size_t count, const std::string& listed) {
  if (listed.empty()) {
    if (count == 0) throw Error(ErrorCode::empty_particulars, "give --p N or --particulars a,b,...");
    return numbered_particulars(count);
  }
  std::set<ParticularObject> atoms;
  std::stringstream in(listed);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) atoms.emplace(token);
  }
  if (atoms.empty()) throw Error(ErrorCode::empty_particulars, "--particulars lists no atoms");
  return {atoms.begin(), atoms.end()};
}

EnumerationStrategy strategy_named(const std::string& name) {
  return name == "dedup" ? EnumerationStrategy::dedup : EnumerationStrategy::orderly;
}

std::string rows_cell(const std::vector<Row>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ' ';
      out += rows[i][j].token();
    }
  }
  return out;
}

Element element_named(const Universe& u, const std::string& value) {
  for (const auto& a : u.objects()) {
    if (label(a) == value) return a;
  }
  for (const auto& s : u.states()) {
    if (label(u, s) == value) return s;
  }
  ParticularObject p(value);
  if (u.has_particular(p)) return p;
  throw Error(ErrorCode::unknown_value, "'" + value + "' names no particular, object or state");
}

std::vector<std::string> formula_lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

struct Options {
  std::string in;
  std::string second;
  std::string universe;
  std::string system;
  std::string format;
  std::string model;
  std::string formula_file;
  std::vector<std::string> formulas;
  std::vector<std::string> binds;
  std::string particulars;
  std::string strategy = "orderly";
  std::string variable;
  std::size_t p = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t max_objects = 0;
  std::size_t max_states = 0;
  std::size_t state_bound = 0;
  std::size_t jobs = 1;
  bool json = false;
  bool saturate_first = false;
  bool raw = false;
  bool timing = false;
  bool witness = false;
};

int cmd_abstract(const Options& o, std::ostream& out) {
  const auto doc = load_system(o.in);
  Universe u(doc.values);
  const auto a = abstract(u, doc.system);
  out << io::abstraction_to_json(u, a).dump(2) << "\n";
  return kExitOk;
}

int cmd_collapse(const Options& o, std::ostream& out) {
  const auto doc = load_system(o.in);
  const io::SystemDocument collapsed{doc.values, collapse(doc.system)};
  out << (o.format == "csv" ? io::to_csv(collapsed.system) : io::to_json(collapsed));
  return kExitOk;
}

int cmd_canon(const Options& o, std::ostream& out) {
  const auto doc = load_system(o.in);
  out << io::canonical_to_json(canonical_form(doc.system)).dump(2) << "\n";
  return kExitOk;
}

int cmd_equal(const Options& o, std::ostream& out) {
  const auto a = load_system(o.in);
  const auto b = load_system(o.second);
  const bool same = systems_equal(a.system, b.system);
  out << (same ? "equal" : "not equal") << "\n";
  out << canonical_id(canonical_form(a.system).rows) << "  " << o.in << "\n";
  out << canonical_id(canonical_form(b.system).rows) << "  " << o.second << "\n";
  return same ? kExitOk : kExitFailed;
}

int cmd_deps(const Options& o, std::ostream& out) {
  std::optional<Universe> u;
  std::string id = o.system;
  if (!o.in.empty()) {
    const auto doc = load_system(o.in);
    u.emplace(doc.values);
    id = abstract(*u, doc.system).system->id();
  } else {
    u.emplace(load_universe(o.universe));
    if (id.empty()) {
      if (u->system_count() != 1) {
        throw Error(ErrorCode::unknown_system, "universe has " + std::to_string(u->system_count()) +
                                                   " systems; choose one with --system");
      }
      id = u->systems().front()->id();
    }
  }
  const auto graph = dependence_graph(*u, id);
  if (o.format == "json") {
    out << graph.to_json().dump(2) << "\n";
  } else {
    out << graph.to_dot();
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  Universe u = load_universe(o.universe);
  if (o.max_objects || o.max_states) {
    Bounds b = u.bounds();
    if (o.max_objects) b.max_objects = o.max_objects;
    if (o.max_states) b.max_states = o.max_states;
    Universe rebounded(u.particulars(), b);
    for (const auto& s : u.systems()) rebounded.register_system(*s);
    u = std::move(rebounded);
  }
  EnumerateOptions eopts;
  eopts.jobs = o.jobs;
  if (o.saturate_first) saturate(u, eopts);

  auto reports = audit(u, eopts);
  if (o.state_bound) reports.push_back(check_max_states(u, o.state_bound));

  bool all = true;
  ordered_json listing = ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.passed();
    if (o.json) {
      listing.push_back(r.to_json());
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.check_name;
    if (!r.passed() && r.witness) out << " " << r.witness->dump();
    out << "\n";
  }
  if (o.json) {
    ordered_json doc;
    doc["format"] = io::kFormatVersion;
    doc["systems"] = u.system_count();
    doc["all_pass"] = all;
    doc["checks"] = std::move(listing);
    out << doc.dump(2) << "\n";
  }
  return all ? kExitOk : kExitFailed;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto particulars = particulars_from(o.p, o.particulars);
  const Bounds bounds{o.max_objects, o.max_states};
  EnumerateOptions eopts;
  eopts.jobs = o.jobs;
  eopts.strategy = strategy_named(o.strategy);
  const auto systems = enumerate_systems(particulars, bounds, eopts);

  if (o.format == "csv") {
    out << "canonical_id,objects,states,rows\n";
    for (const auto& s : systems) {
      out << s.id() << "," << s.object_count() << "," << s.state_count() << "," << rows_cell(s.matrix()) << "\n";
    }
    return kExitOk;
  }
  ordered_json doc;
  doc["format"] = io::kFormatVersion;
  ordered_json atoms = ordered_json::array();
  for (const auto& p : particulars) atoms.push_back(p.token());
  doc["particulars"] = std::move(atoms);
  doc["bounds"] = {{"max_objects", bounds.max_objects}, {"max_states", bounds.max_states}};
  doc["count"] = systems.size();
  ordered_json listing = ordered_json::array();
  for (const auto& s : systems) {
    listing.push_back({{"canonical_id", s.id()},
                       {"objects", s.object_count()},
                       {"states", s.state_count()},
                       {"rows", io::rows_to_json(s.matrix())}});
  }
  doc["systems"] = std::move(listing);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto particulars = particulars_from(o.p, o.particulars);
  EnumerateOptions eopts;
  eopts.jobs = o.jobs;
  eopts.strategy = strategy_named(o.strategy);
  out << "n,count";
  if (o.raw) out << ",blueprints";
  if (o.timing) out << ",wall_ms";
  out << "\n";
  for (std::size_t n = 1; n <= o.n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto count = count_systems(particulars, n, eopts);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    out << n << "," << count;
    if (o.raw) {
      std::size_t states = 1;
      for (std::size_t i = 0; i < n; ++i) states *= particulars.size();
      out << "," << count_blueprints(particulars.size(), n, states);
    }
    if (o.timing) out << "," << static_cast<long long>(elapsed.count());
    out << "\n";
  }
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Universe u = load_universe(o.model);
  Assignment env;
  ParseOptions popts;
  for (const auto& bind : o.binds) {
    const auto eq = bind.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::format_error, "--bind expects name=value, got '" + bind + "'");
    }
    const std::string name = bind.substr(0, eq);
    const Element e = element_named(u, bind.substr(eq + 1));
    popts.free_sorts[name] = sort_of(e);
    env[name] = e;
  }

  std::vector<std::pair<std::string, std::string>> sources;  // (context, text)
  for (std::size_t i = 0; i < o.formulas.size(); ++i) {
    sources.emplace_back("formula " + std::to_string(i + 1), o.formulas[i]);
  }
  if (!o.formula_file.empty()) {
    const auto lines = formula_lines(read_file(o.formula_file));
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!blank_or_comment(lines[i])) sources.emplace_back(o.formula_file + ":" + std::to_string(i + 1), lines[i]);
    }
  }
  if (sources.empty()) throw Error(ErrorCode::syntax_error, "no formula given; use --formula or --formulas");

  const Model m(u);
  bool all = true;
  for (const auto& [context, text] : sources) {
    Formula f = [&, &context = context, &text = text] {
      try {
        return parse_formula(text, popts);
      } catch (const Error& e) {
        throw Error(e.code(), context + ": " + e.detail(), e.position());
      }
    }();
    const bool holds = eval(m, f, env);
    all = all && holds;
    out << (holds ? "true  " : "false ") << print(f) << "\n";
    if (!holds && o.witness) {
      if (auto cx = counterexample(m, f, env)) {
        out << "  counterexample:";
        for (const auto& [name, e] : *cx) out << " " << name << "=" << describe(u, e);
        out << "\n";
      }
    }
  }
  return all ? kExitOk : kExitFailed;
}

int cmd_demo_pga(const Options& o, std::ostream& out) {
  const Universe u = o.universe.empty() ? shifted_pair_universe() : load_universe(o.universe);
  std::string id = o.system;
  if (id.empty()) {
    if (u.system_count() == 0) throw Error(ErrorCode::unknown_system, "universe has no systems");
    id = u.systems().back()->id();
  }
  ParseOptions popts;
  if (!o.variable.empty()) popts.free_sorts[o.variable] = Sort::particular;
  const Formula phi = parse_formula(o.formulas.front(), popts);
  const auto report =
      check_pga(u, id, phi, o.variable.empty() ? std::nullopt : std::optional<std::string>(o.variable));
  out << report.to_json(u).dump(2) << "\n";
  return kExitOk;
}

int cmd_demo_diagonal(const Options& o, std::ostream& out) {
  Universe u(numbered_particulars(2));
  out << "k,objects,states,canonical_id\n";
  std::set<std::string> ids;
  bool distinct = true;
  for (std::size_t k = 1; k <= o.k; ++k) {
    const auto a = abstract(u, diagonal_system(k));
    distinct = ids.insert(a.system->id()).second && distinct;
    out << k << "," << a.system->object_count() << "," << a.system->state_count() << "," << a.system->id() << "\n";
  }
  return distinct ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of arbitrary object theory", "aot"};
  app.require_subcommand(1);
  Options o;

  auto* abstract_cmd = app.add_subcommand("abstract", "Abstract a system; print its canonical form and state map");
  abstract_cmd->add_option("--in", o.in, "System file (JSON or CSV)")->required();

  auto* collapse_cmd = app.add_subcommand("collapse", "Remove duplicate columns");
  collapse_cmd->add_option("--in", o.in, "System file (JSON or CSV)")->required();
  collapse_cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical form and canonical id");
  canon_cmd->add_option("--in", o.in, "System file (JSON or CSV)")->required();

  auto* equal_cmd = app.add_subcommand("equal", "Exit 0 iff two systems abstract to the same system");
  equal_cmd->add_option("first", o.in, "System file")->required();
  equal_cmd->add_option("second", o.second, "System file")->required();

  auto* deps_cmd = app.add_subcommand("deps", "Dependence graph of one system");
  auto* deps_in = deps_cmd->add_option("--in", o.in, "System file (JSON or CSV)");
  auto* deps_universe = deps_cmd->add_option("--universe", o.universe, "Universe file");
  deps_in->excludes(deps_universe);
  deps_cmd->add_option("--system", o.system, "Canonical id within the universe")->needs(deps_universe);
  o.format = "dot";
  deps_cmd->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* check_cmd = app.add_subcommand("check", "Audit a universe against the axioms and lemmas");
  check_cmd->add_option("--universe", o.universe, "Universe file")->required();
  check_cmd->add_flag("--json", o.json, "Print reports as JSON");
  check_cmd->add_flag("--saturate", o.saturate_first, "Register every system within the bounds first");
  check_cmd->add_option("--max-objects", o.max_objects, "Override the comprehension bound on objects");
  check_cmd->add_option("--max-states", o.max_states, "Override the comprehension bound on states");
  check_cmd->add_option("--state-bound", o.state_bound, "Also check the |P|^m state bound for m objects");
  check_cmd->add_option("--jobs", o.jobs, "Worker threads for saturation")->check(CLI::PositiveNumber);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every system within bounds");
  auto* count_cmd = app.add_subcommand("count", "Count systems with at most n objects, for n = 1..N");
  for (auto* cmd : {enumerate_cmd, count_cmd}) {
    auto* p = cmd->add_option("--p", o.p, "Use particulars 0..N-1");
    auto* listed = cmd->add_option("--particulars", o.particulars, "Comma-separated particulars");
    p->excludes(listed);
    cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--strategy", o.strategy, "orderly or dedup")->check(CLI::IsMember({"orderly", "dedup"}));
  }
  enumerate_cmd->add_option("--max-objects", o.max_objects, "Largest object count")->required();
  enumerate_cmd->add_option("--max-states", o.max_states, "Largest state count")->required();
  enumerate_cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  count_cmd->add_option("--n", o.n, "Largest object count")->required();
  count_cmd->add_flag("--raw", o.raw, "Add the raw blueprint count");
  count_cmd->add_flag("--timing", o.timing, "Add wall time in milliseconds");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate formulas over a universe");
  eval_cmd->add_option("--model", o.model, "Universe file")->required();
  eval_cmd->add_option("--formula", o.formulas, "Formula text");
  eval_cmd->add_option("--formulas", o.formula_file, "File with one formula per line");
  eval_cmd->add_option("--bind", o.binds, "Free name assignment name=value");
  eval_cmd->add_flag("--witness", o.witness, "Print a counterexample for failed universal formulas");

  auto* pga_cmd = app.add_subcommand("demo-pga", "Show generic attribution failing by sort separation");
  pga_cmd->add_option("--universe", o.universe, "Universe file (default: the two-state example)");
  pga_cmd->add_option("--system", o.system, "Canonical id of the system");
  pga_cmd->add_option("--formula", o.formulas, "Formula with one free particular variable")->required();
  pga_cmd->add_option("--var", o.variable, "The free particular variable");

  auto* diagonal_cmd = app.add_subcommand("demo-diagonal", "Abstract the diagonal systems 1..k");
  diagonal_cmd->add_option("k", o.k, "Largest diagonal size")->required()->check(CLI::PositiveNumber);

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> commands = {
      {abstract_cmd, cmd_abstract},   {collapse_cmd, cmd_collapse}, {canon_cmd, cmd_canon},
      {equal_cmd, cmd_equal},         {deps_cmd, cmd_deps},         {check_cmd, cmd_check},
      {enumerate_cmd, cmd_enumerate}, {count_cmd, cmd_count},       {eval_cmd, cmd_eval},
      {pga_cmd, cmd_demo_pga},        {diagonal_cmd, cmd_demo_diagonal},
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*deps_cmd && o.in.empty() && o.universe.empty()) {
      throw Error(ErrorCode::format_error, "deps needs --in or --universe");
    }
    for (const auto& [cmd, handler] : commands) {
      if (*cmd) return handler(o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace aot::cli
