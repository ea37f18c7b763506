#pragma once

#include <stdexcept>
#include <string>

namespace cbgen {

// Invalid or contradictory user input. CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// The requested instance cannot be realized (no admissible assignment,
// anti-community regime, sizes that cannot sum to n). CLI exit code 2.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Edge generation failed (rejection cap hit, background resolution budget
// exhausted, ...). CLI exit code 3.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; message carries file and line context.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cbgen
