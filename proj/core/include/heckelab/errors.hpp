#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Coxeter matrix (or its textual form) is malformed.
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

/// BFS hit the element cap without closing up and no length bound was given.
class UnboundedGroup : public Error {
 public:
  using Error::Error;
};

/// A product left the length window of a truncated context.
class OutOfWindow : public Error {
 public:
  using Error::Error;
};

/// The operation needs a finite, fully enumerated group.
class IncompleteGroup : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Raised by the self-checking
/// operations (cs_times_c, c_longest, self_dual_quotient).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace heckelab
