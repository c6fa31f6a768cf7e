#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktg {

// Raised by every text grammar in the library (group specs, structure
// specs, table files, diagram files). Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// The input is well formed but is not the kind of algebra an operation
// requires (e.g. canonicalizing a table that is not knot-theoretic).
class StructureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ktg
