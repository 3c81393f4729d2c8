#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured size/depth bound was exceeded.
struct BoundError : Error {
  using Error::Error;
};

/// Malformed input file or unparsable value.
struct ParseError : Error {
  using Error::Error;
};

/// A coarse structure violates the property required by the queried
/// operation (missing maximum subgroup, no meet, non-unique inverse, ...).
struct StructureError : Error {
  using Error::Error;
};

}  // namespace coarse
