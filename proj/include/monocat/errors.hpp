#pragma once

#include <stdexcept>
#include <string>

namespace monocat {

// Input text that cannot be interpreted: bad syntax, unknown names.
// `line`/`column` are 1-based; 0 means "not applicable".
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_no = 0, int column_no = 0)
      : std::runtime_error(msg), line(line_no), column(column_no) {}
  int line;
  int column;
};

// Well-formed data used outside an operation's domain: a violated
// precondition, an out-of-range index, an uninterpreted symbol.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace monocat
