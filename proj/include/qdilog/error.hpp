#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qdilog {

enum class ErrorKind {
  Parse,
  DuplicateVertex,
  DanglingArrow,
  LoopArrow,
  UnknownVertex,
  KeyMismatch,
  CyclicQuiver,
  NotDynkin,
  NotConnected,
  NotAPartition,
  NotAdmissible,
  ConstraintCycle,
  InvalidOrder,
  CapExceeded,
  TruncationMismatch,
  NonUnit,
  BoundExceeded,
  IncompatibleSeries,
  InconsistentCodim,
  NotTypeA,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown when a directed cycle is found; `witness` is a closed walk
/// v0, v1, ..., v0 of vertex names.
class CyclicQuiverError : public Error {
 public:
  CyclicQuiverError(std::vector<std::string> witness, const std::string& what)
      : Error(ErrorKind::CyclicQuiver, what), witness_(std::move(witness)) {}

  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

}  // namespace qdilog
