#pragma once

#include <stdexcept>
#include <string>

namespace fragfield {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

// SCF / SCC / optimizer failed to reach its threshold.  Carries the last
// value seen so callers can report how far off the run ended.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, double last)
      : std::runtime_error(what), last_value(last) {}
  double last_value;
};

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace fragfield
