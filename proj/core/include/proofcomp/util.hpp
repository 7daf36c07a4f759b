#pragma once

#include <stdexcept>
#include <string>

namespace pc {

// Thrown when a brute-force or search budget would be exceeded. Callers must
// treat this as "no answer", never as a verdict.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (formula, proof script, circuit file, ...).
struct ParseError : std::runtime_error {
  size_t position = 0;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an operation's precondition (wrong language, arity, scope, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pc
