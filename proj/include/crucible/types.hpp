#pragma once

#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace crucible {

// Widest native floating type; every evaluated integral and sum uses it.
using real = long double;

inline constexpr real pi = std::numbers::pi_v<real>;
inline constexpr real epsilon = std::numeric_limits<real>::epsilon();

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature did not reach the requested tolerance within the level cap.
class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidDomain : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// The tail of a semi-infinite integral could be neither truncated nor mapped.
class TailUnbounded : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidOrder : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class Overflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularPoint : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DimensionTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class BadEpsilon : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class MethodMismatch : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crucible
