#pragma once

#include <stdexcept>
#include <string>

namespace arcbound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, s-expressions, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force size guard was exceeded; nothing is truncated silently.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An expression referenced a variable the evaluation point does not bind.
class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Two computations that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Numerical quadrature did not reach its tolerance within the refinement cap.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Point counts over a single finite field do not pin down a dimension.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcbound
