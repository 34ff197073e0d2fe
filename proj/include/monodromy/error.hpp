#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monodromy {

// Precondition violations on otherwise well-formed calls (bad index,
// non-kernel word where a kernel word is required, mismatched bases).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidOrder : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedArity : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured cell/vertex/order cap was exceeded.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A user-supplied Cayley table failed a group axiom; axiom() names it.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string axiom, const std::string& detail)
      : std::runtime_error("group axiom violated (" + axiom + "): " + detail),
        axiom_(std::move(axiom)) {}

  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

// An internal invariant did not hold; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monodromy
