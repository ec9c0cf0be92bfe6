#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdram {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constructor input was the (numerical) zero vector.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

// NaN or Inf reached a public constructor.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

// A state failed its structural invariants (normalization, Hermiticity,
// unit trace, positivity).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Channel strength outside [0, 1] or a parameter outside its stated range.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class NegativeTimeError : public Error {
 public:
  using Error::Error;
};

class EmptySampleError : public Error {
 public:
  using Error::Error;
};

// Detector projection landed on a branch of (numerically) zero probability;
// the residual state is undefined.
class ZeroProbabilityBranchError : public Error {
 public:
  using Error::Error;
};

// Erasure refresh found a cell whose purity is below the pure-state
// threshold; erasure is undefined on mixed states.
class MixedStateCellError : public Error {
 public:
  using Error::Error;
};

class NonPositiveInputError : public Error {
 public:
  using Error::Error;
};

// Pore diameter exceeds the lattice pitch (dots would overlap).
class GeometryViolationError : public Error {
 public:
  using Error::Error;
};

// Config document is not syntactically a key-value document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Config document parsed but a key or value violates its constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Wraps a component error raised inside the experiment loop, attaching the
// cycle at which it happened.
class SimulationError : public Error {
 public:
  SimulationError(std::size_t cycle, const std::string& what)
      : Error("cycle " + std::to_string(cycle) + ": " + what), cycle_(cycle) {}

  std::size_t cycle() const { return cycle_; }

 private:
  std::size_t cycle_;
};

}  // namespace qdram
