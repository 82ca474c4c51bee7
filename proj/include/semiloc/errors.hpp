#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiloc {

/// Base of every error raised by the library. Callers that only care about
/// "something was invalid" catch this; the subclasses carry witnesses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

/// Two objects that belong to different algebras (or modules) were combined.
class OwnerMismatch : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class AssociativityViolation : public ValidationError {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k)
      : ValidationError("associativity fails on basis triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class UnitViolation : public ValidationError {
 public:
  explicit UnitViolation(std::size_t index)
      : ValidationError("unit does not act as identity on basis element " +
                        std::to_string(index)),
        index(index) {}
  std::size_t index;
};

class NotMultiplicative : public ValidationError {
 public:
  NotMultiplicative(std::size_t i, std::size_t j)
      : ValidationError("map is not multiplicative on basis pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")"),
        i(i), j(j) {}
  std::size_t i, j;
};

class UnitNotPreserved : public ValidationError {
 public:
  UnitNotPreserved() : ValidationError("map does not send 1 to 1") {}
};

class BimoduleViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IdealContainsUnit : public Error {
 public:
  IdealContainsUnit() : Error("ideal contains the unit") {}
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class CharTooSmall : public Error {
 public:
  using Error::Error;
};

class SplitBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotASubmodule : public Error {
 public:
  NotASubmodule() : Error("subspace is not closed under the module action") {}
};

class NotLocal : public Error {
 public:
  using Error::Error;
};

class CodomainNotFieldProduct : public Error {
 public:
  using Error::Error;
};

class CoverViolation : public Error {
 public:
  using Error::Error;
};

class NotBiuniform : public Error {
 public:
  using Error::Error;
};

/// A theorem-level check failed. `clause` names the violated statement.
class AssertionFailure : public Error {
 public:
  AssertionFailure(std::string clause, const std::string& detail)
      : Error(clause + ": " + detail), clause(std::move(clause)) {}
  std::string clause;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line(line), column(column) {}
  std::size_t line, column;
};

}  // namespace semiloc
