#pragma once

#include <stdexcept>
#include <string>

namespace cliffgeom {

/// Operands built over different generator counts were combined.
struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A computation would exceed a configured resource guard.
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Desargues configuration (or other geometric input) violates a stated
/// nondegeneracy precondition. `condition` names the failed one.
struct DegenerateConfiguration : std::invalid_argument {
  explicit DegenerateConfiguration(const std::string& cond)
      : std::invalid_argument("degenerate configuration: " + cond), condition(cond) {}
  std::string condition;
};

/// Malformed input text. Line and column are 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

/// Structurally valid input that violates the document schema or its
/// semantic invariants (bad indices, duplicates, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cliffgeom
