#include "aot/error.hpp"

namespace aot {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::empty_system: return "EmptySystem";
    case ErrorCode::non_uniform_width: return "NonUniformWidth";
    case ErrorCode::zero_width: return "ZeroWidth";
    case ErrorCode::duplicate_columns: return "DuplicateColumns";
    case ErrorCode::empty_particulars: return "EmptyParticulars";
    case ErrorCode::unknown_value: return "UnknownValue";
    case ErrorCode::unknown_object: return "UnknownObject";
    case ErrorCode::unknown_state: return "UnknownState";
    case ErrorCode::unknown_system: return "UnknownSystem";
    case ErrorCode::row_not_in_system: return "RowNotInSystem";
    case ErrorCode::different_systems: return "DifferentSystems";
    case ErrorCode::infeasible_bounds: return "InfeasibleBounds";
    case ErrorCode::particulars_mismatch: return "ParticularsMismatch";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::sort_error: return "SortError";
    case ErrorCode::unbound_variable: return "UnboundVariable";
    case ErrorCode::format_error: return "FormatError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message),
      position_(position) {}

}  // namespace aot
