#pragma once

#include <stdexcept>
#include <string>

namespace addcomp {

// A caller violated an operation's contract (e.g. gcd(g, n) != 1 for an
// order computation).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A value lies outside the mathematical domain of an operation
// (alpha outside [0,1], g <= 2 for the geometric avoider, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A bounded search ran out of room. This is an inconclusive result, never a
// refutation of the statement being searched for.
class NotFoundError : public std::runtime_error {
 public:
  explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal certificate that a theorem guarantees turns out
// false. Seeing this means either a bug or a counterexample.
class LemmaViolation : public std::logic_error {
 public:
  explicit LemmaViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace addcomp
