#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aot/abstraction.hpp"
#include "aot/canonical.hpp"
#include "aot/particular.hpp"
#include "aot/universe.hpp"

namespace aot::io {

inline constexpr int kFormatVersion = 1;

/// A particular object system together with its declared value set.
struct SystemDocument {
  std::vector<ParticularObject> values;  // sorted, distinct
  ParticularObjectSystem system;
};

/// {"format": 1, "values": [...], "rows": [[...], ...]}. "values" and
/// "format" are optional on input; atoms may be strings or integers.
SystemDocument parse_system_json(std::string_view text);
/// One row per line, atoms separated by commas. Blank lines and lines
/// starting with '#' are skipped.
SystemDocument parse_system_csv(std::string_view text);
/// Chooses CSV when the first non-blank character is not '{'.
SystemDocument parse_system(std::string_view text);

std::string to_json(const SystemDocument& doc);
std::string to_csv(const ParticularObjectSystem& system);

/// {"format": 1, "canonical_id": ..., "rows": [[...]], "column_order": [...]}
nlohmann::ordered_json canonical_to_json(const CanonicalMatrix& canonical);
nlohmann::ordered_json abstraction_to_json(const Universe& u, const Abstraction& abstraction);

/// {"format": 1, "particulars": [...], "systems": [rows, ...],
///  "bounds": {"max_objects": m, "max_states": r}}. Each system is
/// re-abstracted on load, so the file cannot introduce non-canonical state.
Universe parse_universe_json(std::string_view text);
nlohmann::ordered_json universe_to_json(const Universe& u);

nlohmann::ordered_json rows_to_json(const std::vector<Row>& rows);

}  // namespace aot::io
