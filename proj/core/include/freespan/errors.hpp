#pragma once

#include <stdexcept>
#include <string>

namespace freespan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NonIntegerLength : public Error {
 public:
  NonIntegerLength(std::size_t edge, const std::string& what)
      : Error(what), edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

class UnsatisfiableDemand : public Error {
 public:
  using Error::Error;
};

class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

class DirectedInstance : public Error {
 public:
  using Error::Error;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class TooManyCuts : public Error {
 public:
  using Error::Error;
};

// The two below indicate a bug in this library, never bad input.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace freespan
