#pragma once

#include <stdexcept>
#include <string>

namespace mcda {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (KB row, corpus row, descriptor token, JSON field).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A record parsed cleanly but violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A query vector that fails the validity table. `step()` is the first
/// failing step (1..4).
class InvalidRequest : public Error {
 public:
  InvalidRequest(int step, const std::string& what) : Error(what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

/// The problem description cannot be mapped onto descriptors.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcda
