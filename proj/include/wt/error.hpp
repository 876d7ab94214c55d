#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wt {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a 0-based byte offset into the
/// parsed text (or line number for line-oriented files, see `line()`).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// An operation was called outside its domain (labels outside {1,2}, an
/// unsatisfied precondition, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace wt
