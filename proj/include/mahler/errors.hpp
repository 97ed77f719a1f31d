#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain an operation is defined on.
struct DomainError : Error {
  using Error::Error;
};

/// An iterative scheme did not reach its agreement target.
struct NonConvergence : Error {
  using Error::Error;
};

/// A half-measure was requested over an empty integration range.
struct EmptyRegion : Error {
  using Error::Error;
};

/// Named points were demanded real but their radicals are imaginary.
struct RegionError : Error {
  using Error::Error;
};

/// A rational map was evaluated at a point of its kernel.
struct KernelPoint : Error {
  using Error::Error;
};

/// A lattice node of the brute-force Mahler oracle landed on a zero.
struct SingularNode : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace mahler
