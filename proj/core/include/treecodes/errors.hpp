#pragma once

#include <stdexcept>
#include <string>

namespace treecodes {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: edge lists, graph6 strings, report files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid graph data: self-loops, duplicate edges,
/// vertex ids out of range, or an order that cannot be inferred.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Operation requires a connected graph.
class Disconnected : public Error {
 public:
  using Error::Error;
};

/// Operation requires a tree (connected with m = n - 1).
class NotATree : public Error {
 public:
  using Error::Error;
};

/// The graph admits no identifying code (it has closed twins,
/// i.e. adjacent vertices u, v with N[u] = N[v]).
class NotIdentifiable : public Error {
 public:
  using Error::Error;
};

/// A degree parameter is outside the domain of the operation
/// (e.g. appending a star of degree < 3, or classifying a tree
/// of maximum degree < 3).
class DegreeDomain : public Error {
 public:
  using Error::Error;
};

/// A numeric argument is outside the domain of a closed-form law
/// or a solver capacity limit (e.g. identifying codes of the 2-path).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A certificate handed to an extension operation is not valid.
class InvalidInputCertificate : public Error {
 public:
  using Error::Error;
};

/// The instance is the documented exception of the requested bound
/// (the 4-path for the domination-based bound).
class ExcludedInstance : public Error {
 public:
  using Error::Error;
};

/// A constructive builder failed to meet a bound that is guaranteed to be
/// attainable. This always indicates a bug, never a property of the input.
class InternalBoundViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace treecodes
