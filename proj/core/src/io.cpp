#include "aot/io.hpp"

#include <algorithm>
#include <sstream>

#include "aot/error.hpp"

namespace aot::io {
namespace {

using ordered_json = nlohmann::ordered_json;

nlohmann::json parse_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::format_error, std::string("invalid JSON (byte ") + std::to_string(e.byte) + ")");
  }
}

void check_format(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::format_error, "expected a JSON object");
  if (auto it = doc.find("format"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
      throw Error(ErrorCode::format_error, "unsupported format version " + it->dump());
    }
  }
}

ParticularObject atom_from_json(const nlohmann::json& cell, const std::string& where) {
  if (cell.is_string()) return ParticularObject(cell.get<std::string>());
  if (cell.is_number_integer()) return ParticularObject(cell.dump());
  throw Error(ErrorCode::format_error, where + ": atoms must be strings or integers, got " + cell.dump());
}

std::vector<ParticularObject> atoms_from_json(const nlohmann::json& list, const std::string& where) {
  if (!list.is_array()) throw Error(ErrorCode::format_error, where + " must be an array");
  std::vector<ParticularObject> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(atom_from_json(list[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<Row> rows_from_json(const nlohmann::json& list, const std::string& where) {
  if (!list.is_array()) throw Error(ErrorCode::format_error, where + " must be an array of rows");
  std::vector<Row> rows;
  for (std::size_t i = 0; i < list.size(); ++i) {
    rows.push_back(atoms_from_json(list[i], where + "[" + std::to_string(i) + "]"));
  }
  return rows;
}

std::vector<ParticularObject> sorted_unique(std::vector<ParticularObject> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

SystemDocument make_document(std::vector<Row> rows, std::optional<std::vector<ParticularObject>> values) {
  auto system = validate_pos(std::move(rows));
  if (!values) return {system.values(), std::move(system)};
  auto declared = sorted_unique(std::move(*values));
  for (const auto& atom : system.values()) {
    if (!std::binary_search(declared.begin(), declared.end(), atom)) {
      throw Error(ErrorCode::unknown_value, "'" + atom.token() + "' does not appear in \"values\"");
    }
  }
  return {std::move(declared), std::move(system)};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

ordered_json atoms_to_json(const std::vector<ParticularObject>& atoms) {
  ordered_json out = ordered_json::array();
  for (const auto& atom : atoms) out.push_back(atom.token());
  return out;
}

}  // namespace

ordered_json rows_to_json(const std::vector<Row>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) out.push_back(atoms_to_json(row));
  return out;
}

SystemDocument parse_system_json(std::string_view text) {
  const auto doc = parse_document(text);
  check_format(doc);
  if (!doc.contains("rows")) throw Error(ErrorCode::format_error, "missing \"rows\"");
  auto rows = rows_from_json(doc["rows"], "rows");
  std::optional<std::vector<ParticularObject>> values;
  if (doc.contains("values")) values = atoms_from_json(doc["values"], "values");
  return make_document(std::move(rows), std::move(values));
}

SystemDocument parse_system_csv(std::string_view text) {
  std::vector<Row> rows;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    ++line_number;
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    Row row;
    std::size_t cell_start = 0;
    while (true) {
      auto comma = line.find(',', cell_start);
      auto cell = trim(line.substr(cell_start, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - cell_start));
      if (cell.empty()) {
        throw Error(ErrorCode::format_error, "line " + std::to_string(line_number) + ": empty atom",
                    line_number);
      }
      row.emplace_back(std::string(cell));
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }
    if (!rows.empty() && rows.front().size() != row.size()) {
      throw Error(ErrorCode::non_uniform_width,
                  "line " + std::to_string(line_number) + ": expected " +
                      std::to_string(rows.front().size()) + " atoms, got " + std::to_string(row.size()),
                  line_number);
    }
    rows.push_back(std::move(row));
  }
  return make_document(std::move(rows), std::nullopt);
}

SystemDocument parse_system(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_system_json(text);
  return parse_system_csv(text);
}

std::string to_json(const SystemDocument& doc) {
  ordered_json out;
  out["format"] = kFormatVersion;
  out["values"] = atoms_to_json(doc.values);
  out["rows"] = rows_to_json(doc.system.rows());
  return out.dump() + "\n";
}

std::string to_csv(const ParticularObjectSystem& system) {
  std::ostringstream out;
  for (const auto& row : system.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i].token();
    }
    out << '\n';
  }
  return out.str();
}

ordered_json canonical_to_json(const CanonicalMatrix& canonical) {
  ordered_json out;
  out["format"] = kFormatVersion;
  out["canonical_id"] = canonical_id(canonical.rows);
  out["rows"] = rows_to_json(canonical.rows);
  out["column_order"] = canonical.column_order;
  return out;
}

ordered_json abstraction_to_json(const Universe& u, const Abstraction& abstraction) {
  const auto& system = *abstraction.system;
  ordered_json out;
  out["format"] = kFormatVersion;
  out["canonical_id"] = system.id();
  out["rows"] = rows_to_json(system.matrix());
  out["column_order"] = abstraction.canonical.column_order;
  out["objects"] = system.object_count();
  out["states"] = system.state_count();

  ordered_json columns = ordered_json::array();
  for (std::size_t c = 0; c < abstraction.states.column_map.size(); ++c) {
    columns.push_back(label(abstraction.states.object_for_column(c)));
  }
  out["source_columns"] = std::move(columns);

  ordered_json assignment = ordered_json::array();
  for (const auto& [row, state] : abstraction.states.assignment) {
    ordered_json entry;
    entry["row"] = atoms_to_json(row);
    entry["state"] = label(u, state);
    assignment.push_back(std::move(entry));
  }
  out["state_map"] = std::move(assignment);

  ordered_json facts = ordered_json::array();
  for (const auto& object : system.objects()) {
    for (const auto& state : system.states()) {
      ordered_json fact;
      fact["object"] = label(object);
      fact["state"] = label(u, state);
      fact["value"] = state.row.at(object.column_index - 1).token();
      facts.push_back(std::move(fact));
    }
  }
  out["val"] = std::move(facts);
  return out;
}

Universe parse_universe_json(std::string_view text) {
  const auto doc = parse_document(text);
  check_format(doc);
  if (!doc.contains("particulars")) throw Error(ErrorCode::format_error, "missing \"particulars\"");
  Bounds bounds;
  if (auto it = doc.find("bounds"); it != doc.end()) {
    if (!it->is_object()) throw Error(ErrorCode::format_error, "\"bounds\" must be an object");
    bounds.max_objects = it->value("max_objects", std::size_t{0});
    bounds.max_states = it->value("max_states", std::size_t{0});
  }
  Universe u(atoms_from_json(doc["particulars"], "particulars"), bounds);
  if (auto it = doc.find("systems"); it != doc.end()) {
    if (!it->is_array()) throw Error(ErrorCode::format_error, "\"systems\" must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& entry = (*it)[i];
      const auto& rows = entry.is_object() ? entry.at("rows") : entry;
      const std::string where = "systems[" + std::to_string(i) + "]";
      try {
        abstract(u, validate_pos(rows_from_json(rows, where)));
      } catch (const Error& e) {
        throw Error(e.code(), where + ": " + e.detail(), e.position());
      }
    }
  }
  return u;
}

ordered_json universe_to_json(const Universe& u) {
  ordered_json out;
  out["format"] = kFormatVersion;
  out["particulars"] = atoms_to_json(u.particulars());
  if (!u.bounds().unbounded()) {
    out["bounds"] = {{"max_objects", u.bounds().max_objects}, {"max_states", u.bounds().max_states}};
  }
  ordered_json systems = ordered_json::array();
  for (const auto& system : u.systems()) systems.push_back(rows_to_json(system->matrix()));
  out["systems"] = std::move(systems);
  return out;
}

}  // namespace aot::io
