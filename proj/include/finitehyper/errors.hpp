#pragma once

#include <stdexcept>
#include <string>

namespace finitehyper {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A Pochhammer factor in a denominator vanishes for the given parameters.
/// `location()` names the factor, e.g. "(c)_3 with c=-2".
class PoleError : public Error {
 public:
  explicit PoleError(std::string location)
      : Error("pole: " + location), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// The transformed argument of an identity instance has a vanishing
/// denominator (distinct from a pole of the function definition).
class DegenerateArgument : public Error {
 public:
  using Error::Error;
};

class NotTerminating : public Error {
 public:
  using Error::Error;
};

class DenominatorDivisibleByP : public Error {
 public:
  using Error::Error;
};

class BoundMismatch : public Error {
 public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class ConstantTermNotOne : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfBound : public Error {
 public:
  using Error::Error;
};

/// A numerator that should be a multiple of Z - XY is not.
class DivisionFailure : public Error {
 public:
  using Error::Error;
};

class UnderdeterminedSystem : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Too many sampled instances hit poles or degenerate arguments.
class PoleExhaustion : public Error {
 public:
  using Error::Error;
};

}  // namespace finitehyper
