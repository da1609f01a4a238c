#pragma once

#include <stdexcept>
#include <string>

namespace zcolor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed PD text. Carries the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "parse_error"; }

 private:
  int line_;
  int column_;
};

/// Structurally invalid diagram (multiplicity, orientation, planarity).
class DiagramError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_diagram"; }
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// A bounded move search found nothing that satisfies the contract.
class NoApplicableMove : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "no_applicable_move"; }
};

/// Violated internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal_error"; }
};

}  // namespace zcolor
