#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dih {

/// Thrown when an operation would exceed a configured enumeration budget
/// (the n! oracle cap, the exhaustive-search budget).
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string& what, std::size_t limit)
      : std::runtime_error(what), limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t limit_;
};

/// Matrix text could not be parsed. Row and column are 1-based; 0 means
/// the error is not tied to a particular cell.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t row = 0, std::size_t col = 0)
      : std::runtime_error(what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace dih
