#pragma once

#include <stdexcept>
#include <string>

namespace affect {

// Bad configuration: missing keys, schema problems, invariant violations
// detected before any data-dependent work starts.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data. Carries a 1-based line/row number when known.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what, long line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line(line) {}
  long line;
};

}  // namespace affect
