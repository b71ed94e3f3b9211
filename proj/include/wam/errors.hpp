#pragma once

#include <stdexcept>
#include <string>

namespace wam {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation needs a capability the semiring does not have (field, subtraction).
struct CapabilityError : Error {
  using Error::Error;
};

// Star of a series with nonzero constant term.
struct PropernessError : Error {
  using Error::Error;
};

// Operands disagree on semiring or alphabet.
struct MismatchError : Error {
  using Error::Error;
};

// Word uses a letter outside the alphabet.
struct InvalidWordError : Error {
  using Error::Error;
};

// Relator shape the congruence machinery cannot decide.
struct UnsupportedRelatorError : Error {
  using Error::Error;
};

// Syntax error in an expression, scalar, word or input file.
struct ParseError : Error {
  size_t position;
  ParseError(const std::string& msg, size_t pos = 0) : Error(msg), position(pos) {}
};

}  // namespace wam
