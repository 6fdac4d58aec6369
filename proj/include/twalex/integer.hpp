#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twalex {

/// Unbounded integer used for every polynomial coefficient.
using Integer = mpz_class;

/// Raised when an input string or file does not follow the expected grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? (std::to_string(line) + ":" + std::to_string(column) + ": " + what) : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when two computations that must agree do not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

}  // namespace twalex
