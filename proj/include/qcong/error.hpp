#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// exact_div found a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A congruence modulo a power of Phi_n was requested for rational functions
/// whose denominators share a factor with Phi_n. The congruence is ill-posed,
/// which is distinct from it failing.
class DenominatorNotCoprime : public Error {
 public:
  using Error::Error;
};

/// The expansion of a denominator at q = zeta(1 - eps) has zero constant term.
class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

class ZeroInverse : public Error {
 public:
  using Error::Error;
};

class InvalidResidueClass : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class PrimeTooSmall : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class NotBalanced : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcong
