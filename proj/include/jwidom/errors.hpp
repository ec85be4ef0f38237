#pragma once

#include <stdexcept>
#include <string>

namespace jwidom {

/// Argument outside the region where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, int index = -1)
      : std::runtime_error(what), index_(index) {}

  /// Index of the offending item (e.g. root number), or -1.
  [[nodiscard]] int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Singular leveled system or collapsed reference.
class DegeneracyError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Too few alternation points to continue the exchange.
class ExchangeError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace jwidom
