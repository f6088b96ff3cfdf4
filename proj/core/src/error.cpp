#include "resiclose/error.hpp"

namespace resiclose {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::GraphTooSmall: return "GraphTooSmall";
    case ErrorKind::OutOfValidityDomain: return "OutOfValidityDomain";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::IsAStar: return "IsAStar";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NoEdges: return "NoEdges";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, std::size_t line, const std::string& reason)
    : Error(kind, line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
      line_(line) {}

}  // namespace resiclose
