#pragma once

#include <stdexcept>
#include <string>

namespace ivc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: out-of-range endpoints, wrong degrees for an
/// operation's precondition, odd vertices passed to an Eulerian routine.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A certificate (coloring, factor, edge set) that is structurally unusable,
/// e.g. references an edge that does not exist or leaves edges uncolored.
class CheckError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed JSON input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Reaching one of these means a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ivc
