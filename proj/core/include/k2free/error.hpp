#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "k2free/witness.hpp"

namespace k2free {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected edge-list or DIMACS document. `line()` is 1-based.
class ParseError : public Error {
 public:
  enum class Kind {
    kMissingHeader,
    kMalformedLine,
    kOutOfRange,
    kSelfLoop,
    kDuplicateEdge,
    kEdgeCountMismatch,
  };

  ParseError(Kind kind, std::size_t line, const std::string& detail);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

const char* to_string(ParseError::Kind kind);

/// An argument outside the domain of a predicate (vertex inside S, non-edge
/// passed as an edge, empty set where one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An algorithm was called on input that violates its hypothesis.
class PreconditionError : public Error {
 public:
  enum class Kind {
    kDisconnected,
    kCompleteGraph,
    kNotTwoK2Free,
    kSizeLimit,
    kSubclassMismatch,
    kEmptyRemainder,
    kNotSeparator,
    kDegenerate,
  };

  PreconditionError(Kind kind, const std::string& detail);

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(PreconditionError::Kind kind);

/// Thrown when input is required to be 2K2-free and is not. Carries a
/// certificate.
class NotTwoK2FreeError : public PreconditionError {
 public:
  explicit NotTwoK2FreeError(const TwoK2Witness& witness);

  const TwoK2Witness& witness() const noexcept { return witness_; }

 private:
  TwoK2Witness witness_;
};

/// A structural claim the algorithms rely on did not hold on a concrete
/// graph. `graph_text()` is the canonical edge list of the counterexample.
class FindingError : public Error {
 public:
  FindingError(const std::string& what, std::string graph_text);

  const std::string& graph_text() const noexcept { return graph_text_; }

 private:
  std::string graph_text_;
};

}  // namespace k2free
