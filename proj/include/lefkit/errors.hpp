#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefkit {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by the expression parser; carries the byte offset of the failure.
struct SyntaxError : Error {
  std::size_t position;
  std::string expected;
  SyntaxError(std::size_t pos, const std::string& what_expected)
      : Error("syntax error at position " + std::to_string(pos) + ": expected " + what_expected),
        position(pos),
        expected(what_expected) {}
};

struct UnknownVariable : Error {
  std::string name;
  std::size_t position;
  UnknownVariable(const std::string& var, std::size_t pos)
      : Error("unknown variable '" + var + "' at position " + std::to_string(pos)),
        name(var),
        position(pos) {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular over the rationals") {}
};

struct NonHomogeneousInput : Error {
  NonHomogeneousInput() : Error("ideal-level operations require homogeneous input") {}
};

struct NotArtinian : Error {
  std::string variable;
  explicit NotArtinian(const std::string& var)
      : Error("quotient is not Artinian: no pure power of '" + var + "' in the leading term ideal"),
        variable(var) {}
};

struct NotGorenstein : Error {
  NotGorenstein() : Error("algebra is not Gorenstein (socle dimension != 1)") {}
};

struct ZeroLinearForm : Error {
  ZeroLinearForm() : Error("linear form must be nonzero") {}
};

struct DenominatorDivisibleByP : Error {
  explicit DenominatorDivisibleByP(const std::string& p)
      : Error("denominator divisible by p = " + p) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& p) : Error("modulus " + p + " is not prime") {}
};

/// First colon quotient in a chain that is neither a complete intersection nor zero.
struct HypothesisFails : Error {
  unsigned power;
  explicit HypothesisFails(unsigned k)
      : Error("colon quotient at power " + std::to_string(k) +
              " is neither a complete intersection nor zero"),
        power(k) {}
};

struct UnknownGalleryName : Error {
  explicit UnknownGalleryName(const std::string& name)
      : Error("unknown gallery instance '" + name + "'") {}
};

struct MalformedManifest : Error {
  using Error::Error;
};

}  // namespace lefkit
