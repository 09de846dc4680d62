#pragma once

#include <stdexcept>
#include <string>

namespace wmc {

// Violated precondition or broken internal invariant. The CLI maps this to
// exit code 2; library callers are expected not to trigger it.
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Bad configuration value (alpha outside (0,1), malformed generator spec, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance too large for an enumeration-based routine.
struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; carries the 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

}  // namespace wmc
