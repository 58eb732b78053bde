#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewspec {

enum class ErrorKind {
  Dimension,
  Singular,
  Argument,
  NotSkewAdjacency,
  Parse,
  NotControllable,
  Capability,
  InvalidMatrix,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; the kind drives the C status code
// and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::NotSkewAdjacency: return "not-skew-adjacency";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NotControllable: return "not-controllable";
    case ErrorKind::Capability: return "capability";
    case ErrorKind::InvalidMatrix: return "invalid-matrix";
  }
  return "unknown";
}

}  // namespace skewspec
