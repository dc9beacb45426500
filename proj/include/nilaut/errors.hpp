#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilaut {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text that could not be parsed. Line and column are 1-based; 0 means unknown.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct ConsistencyError : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct CollectionBudgetExceeded : Error { using Error::Error; };
struct NotAbelian : Error { using Error::Error; };
struct NotClass2 : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct InadmissibleTriple : Error { using Error::Error; };
struct ThetaNotHomomorphism : Error { using Error::Error; };
struct YNotCentral : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };

}  // namespace nilaut
