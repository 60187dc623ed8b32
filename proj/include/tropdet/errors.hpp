#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropical {

// Base of every error the library throws. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed matrix text: bad token, negative value, empty input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Wrong dimensions: ragged rows, non-square where a square is required.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A matrix is not in D(m,n): some line sum differs from the common value.
class ViolationError : public Error {
 public:
  enum class Line { Row, Column };

  ViolationError(Line line, std::size_t index, std::int64_t sum,
                 std::int64_t expected, const std::string& what)
      : Error(what), line_(line), index_(index), sum_(sum), expected_(expected) {}

  Line line() const { return line_; }
  std::size_t index() const { return index_; }
  std::int64_t sum() const { return sum_; }
  std::int64_t expected() const { return expected_; }

 private:
  Line line_;
  std::size_t index_;
  std::int64_t sum_;
  std::int64_t expected_;
};

// Arguments outside the domain of a formula or construction.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Brute-force routines refuse inputs that would blow up factorially.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Prescribed marginals cannot be met under the per-entry cap.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Enumeration stopped after visiting `visited` matrices.
class BudgetError : public Error {
 public:
  BudgetError(std::uint64_t visited, std::uint64_t budget)
      : Error("work budget of " + std::to_string(budget) +
              " matrices exceeded (visited " + std::to_string(visited) + ")"),
        visited_(visited),
        budget_(budget) {}

  std::uint64_t visited() const { return visited_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t visited_;
  std::uint64_t budget_;
};

}  // namespace tropical
