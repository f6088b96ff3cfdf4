#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resiclose {

enum class ErrorKind {
  InvalidFamilyParams,
  ParseError,
  DuplicateEdge,
  SelfLoop,
  IndexOutOfRange,
  EmptyGraph,
  NoSuchEdge,
  GraphTooSmall,
  OutOfValidityDomain,
  Disconnected,
  NotRegular,
  NotATree,
  IsAStar,
  TooSmall,
  NoEdges,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the edge-list reader. line() is 1-based; 0 when the problem is
// not tied to a single line (e.g. a header/edge-count mismatch).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace resiclose
