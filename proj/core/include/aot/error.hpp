#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aot {

enum class ErrorCode {
  empty_system,
  non_uniform_width,
  zero_width,
  duplicate_columns,
  empty_particulars,
  unknown_value,
  unknown_object,
  unknown_state,
  unknown_system,
  row_not_in_system,
  different_systems,
  infeasible_bounds,
  particulars_mismatch,
  syntax_error,
  sort_error,
  unbound_variable,
  format_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `position` is a 0-based character
/// offset for syntax and sort errors in formula text, and a 1-based line
/// number for CSV input; it is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the error-code prefix carried by what().
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<std::size_t>& position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace aot
