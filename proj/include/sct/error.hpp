#pragma once

#include <stdexcept>
#include <string>

namespace sct {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument combination (bad index, mismatched sources, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A simplicial operator was applied at a dimension where it is undefined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation would need simplices above the dimension cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A value failed its structural invariants (simplicial identities,
/// associativity, naturality, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A required inner horn has no filler.
class NotQuasiCategoryError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure of a construction that should never fire.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text-format error; carries the 1-based line number.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace sct
