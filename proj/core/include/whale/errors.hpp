#pragma once

#include <stdexcept>
#include <string>

namespace whale {

/// Base class for all kernel errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two elements over different generator sets were combined.
struct AlgebraMismatch : Error {
  using Error::Error;
};

/// An operation required a homogeneous element or a legal degree.
struct DegreeError : Error {
  using Error::Error;
};

/// A quotient was requested with boundaries outside the cycle span,
/// i.e. the ambient data does not form a chain complex.
struct InvalidComplex : Error {
  using Error::Error;
};

/// An element that had to be a cycle was not.
struct NotACycle : Error {
  using Error::Error;
};

/// The requested computation needs ambient degrees beyond the stated cap.
struct CapTooLow : Error {
  CapTooLow(const std::string& what, int needed, int cap)
      : Error(what), needed_degree(needed), cap(cap) {}
  int needed_degree;
  int cap;
};

/// A map declared as a surjective quasi-isomorphism failed one of the
/// degreewise checks, or a lifting solve had no solution.
struct QuasiIsoViolation : Error {
  QuasiIsoViolation(const std::string& what, int degree)
      : Error(what), degree(degree) {}
  int degree;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line, int column)
      : Error(what), line(line), column(column) {}
  int line;
  int column;
};

struct ValidationError : Error {
  using Error::Error;
};

}  // namespace whale
