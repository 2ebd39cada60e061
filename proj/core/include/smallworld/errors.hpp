#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace smallworld {

// Caller misused an interface: wrong flag combination, mode/graph mismatch,
// out-of-range configuration. Maps to CLI exit code 1.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Input data could not be read or understood. Maps to CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public DataError {
 public:
  ParseError(std::uint64_t line_number, const std::string& what)
      : DataError("line " + std::to_string(line_number) + ": " + what),
        line_number_(line_number) {}

  std::uint64_t line_number() const { return line_number_; }

 private:
  std::uint64_t line_number_;
};

// A requested statistic has no defined value on this input (empty graph,
// zero-variance degree sequence). Distinct from DataError so callers can
// render "undefined" instead of failing.
class UndefinedStatisticError : public std::domain_error {
 public:
  explicit UndefinedStatisticError(const std::string& what)
      : std::domain_error(what) {}
};

// Pearson assortativity is 0/0 when an endpoint degree sequence has zero
// variance (regular graphs). Thrown instead of returning a number.
class UndefinedAssortativityError : public UndefinedStatisticError {
 public:
  explicit UndefinedAssortativityError(const std::string& what)
      : UndefinedStatisticError(what) {}
};

}  // namespace smallworld
