#pragma once

#include <stdexcept>
#include <string>

namespace semigraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Algebra construction and lookup.
class UnknownAlgebraError : public Error {
 public:
  using Error::Error;
};
class MalformedAlgebraError : public Error {
 public:
  using Error::Error;
};

// Array shape and key-domain violations.
class KeyDomainError : public Error {
 public:
  using Error::Error;
};
class ShapeError : public Error {
 public:
  using Error::Error;
};
class AlgebraMismatchError : public Error {
 public:
  using Error::Error;
};
class SelectorError : public Error {
 public:
  using Error::Error;
};

// Sparse mode requested for an algebra whose 0 does not annihilate.
class ModeError : public Error {
 public:
  using Error::Error;
};

// Incidence construction.
class InvalidWeightError : public Error {
 public:
  using Error::Error;
};
class HyperedgeError : public Error {
 public:
  using Error::Error;
};

// Witness harness preconditions.
class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

// Tabular ingestion.
class AmbiguousKeyError : public Error {
 public:
  using Error::Error;
};

// File / value parsing.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace semigraph
