#pragma once

#include <stdexcept>
#include <string>

namespace bac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

// Covers NonSquare, DimensionMismatch and ShapeMismatch conditions.
struct ShapeError : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

struct NotAcyclic : Error {
  using Error::Error;
};

struct NotInvolution : Error {
  using Error::Error;
};

struct NotChainMap : Error {
  using Error::Error;
};

struct TooShort : Error {
  using Error::Error;
};

struct InvalidLadder : Error {
  using Error::Error;
};

struct InvalidSes : Error {
  using Error::Error;
};

struct InvalidDiagram : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace bac
