#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leavitt {

// Base for every error caused by bad input or a violated precondition.
// Anything else escaping the library (std::logic_error) is a bug.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public DomainError {
 public:
  AlphabetMismatch(std::size_t lhs, std::size_t rhs)
      : DomainError("alphabet mismatch: d=" + std::to_string(lhs) + " vs d=" + std::to_string(rhs)) {}
};

class LetterOutOfRange : public DomainError {
 public:
  LetterOutOfRange(long long letter, std::size_t d)
      : DomainError("letter " + std::to_string(letter) + " outside [1, " + std::to_string(d) + "]") {}
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotInCore : public DomainError {
 public:
  using DomainError::DomainError;
};

class LevelError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BoundExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace leavitt
