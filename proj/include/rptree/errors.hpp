// Exception types for validation and arithmetic failures. Each failure kind
// gets its own class so callers and tests can branch on it.
#pragma once

#include <stdexcept>

namespace rptree {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parent links contain a cycle or cannot terminate at a root.
class CycleDetected : public Error {
 public:
  using Error::Error;
};

// Edge-list input does not connect every vertex to the root.
class DisconnectedInput : public Error {
 public:
  using Error::Error;
};

// A vertex label lies outside 1..n.
class LabelOutOfRange : public Error {
 public:
  using Error::Error;
};

// More than one vertex is declared parentless.
class DuplicateRoot : public Error {
 public:
  using Error::Error;
};

// A code entry lies outside 1..n.
class EntryOutOfRange : public Error {
 public:
  using Error::Error;
};

// The operation requires a tree rooted at vertex 1.
class RootNotOne : public Error {
 public:
  using Error::Error;
};

// The requested instance exceeds the configured enumeration cap.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

// Exact 64-bit integer arithmetic overflowed.
class IntegerOverflow : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rptree
