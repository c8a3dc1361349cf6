#pragma once

#include <stdexcept>
#include <string>

namespace hyperpd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal text or hypergraph JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (unknown label, shape mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The exact oracle would need more variables than the configured limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperpd
