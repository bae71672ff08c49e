#pragma once

#include <stdexcept>
#include <string>

namespace cycposet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The relation handed to make_poset contains a directed cycle.
struct CycleError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

// Full element enumeration was requested for a group above the cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct NotCyclic : Error {
  using Error::Error;
};

// Argument outside the domain of a number-theoretic or construction routine.
struct DomainError : Error {
  using Error::Error;
};

// Point count beyond the configured bit-matrix bound.
struct CapacityError : Error {
  using Error::Error;
};

struct LimitExceeded : Error {
  using Error::Error;
};

}  // namespace cycposet
