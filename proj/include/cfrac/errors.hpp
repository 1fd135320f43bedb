#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfrac {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational was constructed with denominator zero.
class ZeroDenominatorError : public Error {
 public:
  ZeroDenominatorError() : Error("zero denominator") {}
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero") {}
};

/// An argument is outside the mathematical domain of the operation
/// (nonpositive x or y, z = 0, tol <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Base for errors tied to a particular term index of an expansion.
class TermError : public Error {
 public:
  TermError(const std::string& what, std::size_t index)
      : Error(what + " at index " + std::to_string(index)), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A finite expansion was asked for a term past its end.
class ExpansionExhaustedError : public TermError {
 public:
  explicit ExpansionExhaustedError(std::size_t index)
      : TermError("finite expansion exhausted", index) {}
};

class ZeroNumeratorError : public TermError {
 public:
  explicit ZeroNumeratorError(std::size_t index)
      : TermError("zero partial numerator", index) {}
};

class NonPositiveTermError : public TermError {
 public:
  explicit NonPositiveTermError(std::size_t index)
      : TermError("nonpositive term", index) {}
};

class NonIntegralTermError : public TermError {
 public:
  explicit NonIntegralTermError(std::size_t index)
      : TermError("nonintegral term", index) {}
};

/// An equivalence transform scale c_i was zero.
class ZeroScaleError : public TermError {
 public:
  explicit ZeroScaleError(std::size_t index)
      : TermError("zero equivalence scale", index) {}
};

/// The rule is not of a shape the operation supports.
class UnsupportedRuleError : public Error {
 public:
  using Error::Error;
};

/// a_i can never overtake b_i (nonpositive a-slope).
class TailUnreachableError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfrac
