#pragma once

#include <stdexcept>
#include <string>

namespace kbqa {

// Error taxonomy. Each family maps to a distinct failure mode so callers
// (and the CLI exit-code mapping) can tell misuse from bad data.

// Tensor dimensions do not line up.
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Input is outside an operation's mathematical domain (empty sequence,
// zero-norm vector, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// API called against its contract (backward twice, missing grad, ...).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid model or pipeline configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; message carries the 1-based line number.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Identifier not present in a catalog.
struct LookupError : std::runtime_error {
  explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kbqa
