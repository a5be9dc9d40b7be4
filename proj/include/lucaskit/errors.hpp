#pragma once

#include <stdexcept>
#include <string>

namespace lucaskit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The quotient of an exact division is not a polynomial over the integers.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A polynomial mixes monomials of different weight s_exp + 2 t_exp.
class NotWeightedHomogeneous : public Error {
 public:
  using Error::Error;
};

/// A strip cut would split a domino.
class BrokenDomino : public Error {
 public:
  using Error::Error;
};

/// Structural corruption detected inside the involution (carries the case trace).
class Malformed : public Error {
 public:
  using Error::Error;
};

/// A rectangle tiling that is not in the image of the partial-tiling bijection.
class MalformedModel : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An identity that the mathematics guarantees failed to hold.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace lucaskit
