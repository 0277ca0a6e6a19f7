#pragma once

#include <stdexcept>
#include <string>

namespace skewbrace {

enum class errc {
  malformed_table,
  no_identity_at_zero,
  missing_inverse,
  not_associative,
  index_out_of_range,
  size_mismatch,
  not_a_subgroup,
  not_a_subdigroup,
  not_an_ideal,
  not_a_brace,
  order_bound_exceeded,
  unknown_name,
  element_not_in_component,
  kernel_not_invariant,
  invalid_action,
  decomposition_invalid,
  parse_error,
};

const char* to_string(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Syntax-level failure while reading a text format; carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(errc::parse_error, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace skewbrace
