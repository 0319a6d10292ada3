#ifndef POLYCOND_ERRORS_HPP
#define POLYCOND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polycond {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (log of zero, condition at a zero).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed arguments: bad degree, empty interval, size mismatch, index out of range.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Duplicate or numerically coincident nodes, all-zero weights.
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

class UnsupportedBasisError : public Error {
public:
  using Error::Error;
};

/// A perturbation with |delta_k| > epsilon.
class ModelViolationError : public Error {
public:
  using Error::Error;
};

/// Root condition requested at a multiple root (p'(r) = 0).
class SingularityError : public Error {
public:
  using Error::Error;
};

/// Working precision too low for the requested contour levels.
class PrecisionError : public Error {
public:
  using Error::Error;
};

} // namespace polycond

#endif // POLYCOND_ERRORS_HPP
