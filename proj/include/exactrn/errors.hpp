#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exactrn {

/// Argument outside an operation's domain (zero divisor, negative radicand,
/// standard part of an infinite element, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands with mismatched dimensions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A consistency check that can only fail on an implementation bug, never on
/// bad input.
class LogicFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntax error in an expression or input file. position() is a byte offset
/// into the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace exactrn
