#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparseable half-integer, argument shape violations.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Mathematically out-of-domain request: selection-rule or triangle
/// violations, negative factorial arguments, |cos| > 1.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Flat tetrahedron (Cayley-Menger determinant = 0).
class DegenerateError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Tetrahedron with no Euclidean embedding (Cayley-Menger determinant < 0).
class ForbiddenRegionError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A sweep schedule point cannot be realized (invalid triad, no valid
/// projection, non-positive scale).
class ScheduleError : public Error {
public:
  using Error::Error;
};

/// Internal invariant breach, e.g. a phase exponent that should be an
/// integer is not. Indicates a caller bug, not bad data.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace wigner
