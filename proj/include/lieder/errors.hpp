#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "lieder/rational.hpp"

namespace lieder {

/// Base class for all recoverable (input-level) errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// The Jacobi identity fails on basis triple (i, j, l); indices are
/// 0-based here, 1-based in the message.
struct JacobiViolation : Error {
  JacobiViolation(std::size_t i, std::size_t j, std::size_t l, Vec residual,
                  const std::string& message)
      : Error(message), i(i), j(j), l(l), residual(std::move(residual)) {}
  std::size_t i, j, l;
  Vec residual;
};

struct NotNilpotentError : Error {
  using Error::Error;
};

struct NotADerivationError : Error {
  using Error::Error;
};

/// An adjoint operator has a forbidden entry: the image of a basis
/// vector reaches an earlier basis vector (row < col).
struct NotTriangularError : Error {
  NotTriangularError(std::size_t row, std::size_t col, const std::string& message)
      : Error(message), row(row), col(col) {}
  std::size_t row, col;
};

struct NotNormalizedError : Error {
  using Error::Error;
};

/// Malformed or inconsistent family spec data.
struct SpecError : Error {
  using Error::Error;
};

struct WrongGeneratorCountError : SpecError {
  WrongGeneratorCountError(std::size_t expected, std::size_t actual,
                           const std::string& message)
      : SpecError(message), expected(expected), actual(actual) {}
  std::size_t expected, actual;
};

struct AlphaNotDerivationError : SpecError {
  AlphaNotDerivationError(std::size_t generator, const std::string& message)
      : SpecError(message), generator(generator) {}
  std::size_t generator;  // 0-based torus generator index
};

struct RankDeficientSelectionError : SpecError {
  using SpecError::SpecError;
};

struct PreconditionViolation : Error {
  using Error::Error;
};

/// A theorem-level assertion failed: either an implementation bug or a
/// genuine counterexample. Never silently swallowed.
struct TheoremViolation : Error {
  using Error::Error;
};

struct GeneratorExhaustedError : Error {
  using Error::Error;
};

/// Signals a bug in this library, not a user error.
struct InternalInvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lieder
