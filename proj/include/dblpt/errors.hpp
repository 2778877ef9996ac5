#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dblpt {

/// A well-formed request that falls outside what the engine computes, e.g. a
/// Dyer-Lashof composition that would need the Adem relations to rewrite.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InadmissibleComposition : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed expression text; `offset` is the 0-based byte position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dblpt
