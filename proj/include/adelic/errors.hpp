#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the region where an operation is defined
// (convergence half-planes, missing fibre data, unsupported families).
class DomainError : public Error {
public:
  using Error::Error;
};

// Evaluation at (or numerically too close to) a pole.
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

// Malformed input data: curve numerators, surface models, set expressions.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A set expression that does not reduce to a disjoint union of boxes.
class SetAlgebraError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Requested construction is outside what the data model supports
// (shifted boxes in Fourier transforms, rr_dim on generic curves).
class UnsupportedError : public DomainError {
public:
  using DomainError::DomainError;
};

// A derived quantity violated a structural expectation, e.g. Q(s) failed to
// reduce to a gamma-free monomial.
class ConventionError : public Error {
public:
  using Error::Error;
};

} // namespace adelic
