#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geogrow {

/// Malformed user input: bad edge lists, unknown names, out-of-range vertices.
/// Everything in this family maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Edge-list syntax or consistency error, tagged with the 1-based line number.
class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// The geodesic automaton only exists for triangle-free defining graphs.
class TriangleError : public InputError {
public:
  TriangleError(int a, int b, int c)
      : InputError("graph contains the triangle {" + std::to_string(a) + ", " + std::to_string(b) +
                   ", " + std::to_string(c) + "}"),
        a_(a), b_(b), c_(c) {}

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int c() const noexcept { return c_; }

private:
  int a_, b_, c_;
};

/// Exhaustive enumeration would exceed the configured word budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace geogrow
