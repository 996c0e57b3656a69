#pragma once

#include <stdexcept>
#include <string>

namespace holobraid {

// Base for all library errors so callers can catch one type at the boundary.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input; position is 1-based.
struct ParseError : Error {
  ParseError(std::string msg, int line, int column)
      : Error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

// Operands live in different braid groups.
struct StrandMismatchError : Error {
  using Error::Error;
};

// A search or iteration bound was exceeded.  For the Garside routines this
// signals an implementation bug (termination is a theorem), for the word
// rewriting oracle it means the instance is too large for the oracle.
struct CapExceededError : Error {
  using Error::Error;
};

// A v3/Markov move whose side condition failed; the message names the check.
struct IllegalMoveError : Error {
  using Error::Error;
};

// Input function violates a genericity assumption (non-simple zero,
// non-transverse crossing, ...).
struct DegenerateInputError : Error {
  using Error::Error;
};

// The axis crossings of the two winding directions interleave, so the
// projection is not a closed braid about any point.
struct NoSeparatingPointError : Error {
  using Error::Error;
};

}  // namespace holobraid
