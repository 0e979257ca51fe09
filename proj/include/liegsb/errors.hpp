#pragma once

#include <stdexcept>
#include <string>

namespace liegsb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 64-bit exact arithmetic left its representable range.
struct ArithmeticOverflow : Error {
  using Error::Error;
};

// Z-mode operation would need to divide by a coefficient other than +-1.
struct NonUnitCoefficient : Error {
  using Error::Error;
};

// An associative polynomial handed to the contraction loop is not the
// expansion of a Lie element.
struct NotLieElement : Error {
  using Error::Error;
};

// A stated precondition does not hold (empty word, not an ALSW, degree
// bound exceeded, mismatched alphabets, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// ideal_member called on a relation set whose compositions were never
// checked (or whose check failed).
struct UnverifiedBasis : Error {
  using Error::Error;
};

// A semigroup operation that needs a confluent rewriting system was given
// an incomplete one.
struct IncompleteSystem : Error {
  using Error::Error;
};

struct ParseError : Error {
  size_t line, col;
  ParseError(const std::string& msg, size_t line_, size_t col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

}  // namespace liegsb
