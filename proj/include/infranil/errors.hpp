#pragma once

#include <stdexcept>
#include <string>

namespace infranil {

/// Bad or inconsistent user input (parse errors, schema violations,
/// groups/maps that fail validation). CLI exit code 1.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural theorem the engine relies on was violated at runtime
/// (negative irreducible counts, non-integer averaged determinants,
/// dual-route disagreement). Signals corrupt input or an engine bug.
/// CLI exit code 2.
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix/vector shape mismatch.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace infranil
