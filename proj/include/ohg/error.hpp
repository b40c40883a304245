#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ohg {

enum class ErrorKind {
  unknown_id,
  duplicate_id,
  slot_gap,
  mixed_signs,
  invalid_walk,
  not_a_circle,
  not_a_2edge,
  loop_edge,
  not_degree2,
  same_edge,
  bad_bipartition,
  bad_entries,
  limit_exceeded,
  syntax_error,
  semantic_error,
  infeasible_params,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is reported as an Error carrying a
// machine-readable kind. Parse errors additionally carry a 1-based location.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Error(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace ohg
