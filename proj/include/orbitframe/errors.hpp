#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitframe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies on or outside the admissible disk |z| < 1 - margin.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed arguments: size mismatches, out-of-range indices, bad radii.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The configuration has repeated points where single multiplicities are required.
class SingularConfiguration : public Error {
 public:
  using Error::Error;
};

/// A Hermitian eigen solve did not meet the residual tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The separation grid found no admissible radius, or a construction step
/// violated one of its own invariants.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// The ball centered at `center` holds more than m points.
class SeparationViolation : public Error {
 public:
  SeparationViolation(std::size_t center, std::size_t count, const std::string& what)
      : Error(what), center_(center), count_(count) {}
  std::size_t center() const noexcept { return center_; }
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t center_;
  std::size_t count_;
};

/// Column j of the seed vectors vanishes, so the standard basis vector e_j
/// receives zero energy from every orbit and the lower frame bound is 0.
class ZeroColumnError : public Error {
 public:
  ZeroColumnError(std::size_t column, const std::string& what) : Error(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace orbitframe
