// Copyright 2026 The rlam Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rlam {

/// Base class for all engine errors. Operational failures are thrown;
/// validation violations are returned as data (see validation.hpp).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed canonical input (trace file, action document, hash literal).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t offset = 0)
      : Error(what), line_(line), offset_(offset) {}
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// A requested object is not present in the artifact store.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A trace references an artifact the store cannot produce; raised during
/// replay, where it signals a violated provenance invariant.
class MissingArtifactError : public Error {
 public:
  using Error::Error;
};

/// Appending a node whose parents are not all present in the trace.
class DanglingParentError : public Error {
 public:
  using Error::Error;
};

/// Appending a node whose id is already taken.
class DuplicateNodeIdError : public Error {
 public:
  using Error::Error;
};

/// Registering two adapters under the same name.
class DuplicateAdapterError : public Error {
 public:
  using Error::Error;
};

/// A symbolic artifact reference targets a missing node or output.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition of an operation was violated by the caller;
/// signals an engine bug, never user input.
class InvariantViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace rlam
