#pragma once

#include <stdexcept>
#include <string>

namespace ecgen {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text: non-hex digit, bad point syntax, bad curve-file line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Value does not fit the destination (capacity, hex width, bit index).
class RangeError : public Error {
 public:
  using Error::Error;
};

// a - b with a < b on unsigned integers.
class UnderflowError : public Error {
 public:
  using Error::Error;
};

// Operands belong to different fields or curves.
class ContextError : public Error {
 public:
  using Error::Error;
};

class NoInverseError : public Error {
 public:
  using Error::Error;
};

// Point not on the curve it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structural problem in a curve file (missing/duplicate/unknown key).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Curve parameters violate a curve invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class RandomnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace ecgen
