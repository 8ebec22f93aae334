#pragma once

#include <stdexcept>
#include <string>

namespace cobeh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a structural invariant (bad label, index out of range,
/// unparsable literal, broken lattice law).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A powerset construction was requested on a carrier larger than the
/// configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cobeh
