#pragma once

#include <stdexcept>
#include <string>

namespace seqcm {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& where)
      : Error("ring mismatch in " + where) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NotFiniteLength : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a randomized search runs out of attempts.
class SearchFailure : public Error {
 public:
  SearchFailure(const std::string& msg, std::string last_counterexample)
      : Error(msg), last_counterexample_(std::move(last_counterexample)) {}
  const std::string& last_counterexample() const { return last_counterexample_; }

 private:
  std::string last_counterexample_;
};

/// Raised when an iterative procedure exceeds its safety cap.
class IterationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace seqcm
