#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bondzeta {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// linalg
class DimensionError : public Error {
 public:
  using Error::Error;
};
class SymmetryError : public Error {
 public:
  using Error::Error;
};
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// graph
class LoopRejectedError : public Error {
 public:
  using Error::Error;
};
class ConnectivityError : public Error {
 public:
  using Error::Error;
};
class CycleError : public Error {
 public:
  using Error::Error;
};

// edge weights / Hermitian data
class IncompleteDataError : public Error {
 public:
  using Error::Error;
};
class StructureError : public Error {
 public:
  using Error::Error;
};
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// Raised when H_uu - lambda - i Gamma_u vanishes (to 1e-12) at some vertex.
class PoleError : public Error {
 public:
  PoleError(std::size_t vertex, const std::string& what)
      : Error(what), vertex_(vertex) {}
  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

// coverings and representations
class GroupError : public Error {
 public:
  using Error::Error;
};
class RepresentationError : public Error {
 public:
  using Error::Error;
};
class CoveringError : public Error {
 public:
  using Error::Error;
};

/// Enumeration budget exceeded (cycle lengths above 12).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance files and bad command-line input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace bondzeta
