#pragma once

#include <stdexcept>
#include <string>

namespace hybridisc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Disc data that cannot describe a valid exterior domain (overlap, radius <= 0, s >= d).
class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

/// Geometry that is valid but not handled (unequal radii in a close pair).
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

/// The annulus point that maps to z = infinity.
class PoleAtInfinity : public Error {
 public:
  using Error::Error;
};

/// The physical point z = A that maps to zeta = infinity.
class PoleInDisc : public Error {
 public:
  using Error::Error;
};

/// A series or product did not reach its tolerance within the term cap.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Evaluation point strictly inside one of the discs.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

class UnderdeterminedSystem : public Error {
 public:
  using Error::Error;
};

/// Every singular value fell below the rank threshold.
class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridisc
