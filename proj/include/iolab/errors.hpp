#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace iolab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relation input contains a directed cycle; carries a witness cycle.
struct CycleError : Error {
  std::vector<int> cycle;
  explicit CycleError(std::vector<int> c)
      : Error("cycle detected"), cycle(std::move(c)) {}
};

struct IndexError : Error {
  explicit IndexError(const std::string& what) : Error(what) {}
};

// Exponential routine asked to run above its configured bound.
struct SizeGuardError : Error {
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

// The poset embeds 2+2; carries the witness quadruple (a<b, c<d).
struct NotIntervalOrderError : Error {
  int a, b, c, d;
  NotIntervalOrderError(int a_, int b_, int c_, int d_)
      : Error("not an interval order"), a(a_), b(b_), c(c_), d(d_) {}
};

struct SpecError : Error {
  explicit SpecError(const std::string& what) : Error(what) {}
};

// An internal theorem-backed assertion failed.
struct ContractError : Error {
  explicit ContractError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  int line, column;
  ParseError(const std::string& what, int line_, int column_ = 0)
      : Error(what + " (line " + std::to_string(line_) +
              (column_ ? ", col " + std::to_string(column_) : std::string()) + ")"),
        line(line_), column(column_) {}
};

struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(what) {}
};

struct NotLimitError : Error {
  explicit NotLimitError(const std::string& what) : Error(what) {}
};

// Size guards for the exponential routines. IOLAB_GUARD_N overrides both.
int subset_guard();
int iso_guard();

}  // namespace iolab
