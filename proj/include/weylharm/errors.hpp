#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylharm {

/// Input is well-formed but outside an operation's domain (non-invariant
/// operator, repeated projector index, non-terminating series, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed expression text. `offset()` is the byte position of the
/// offending token in the source.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Expression is syntactically valid but expands past the evaluator's size limits.
class LimitError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

}  // namespace weylharm
