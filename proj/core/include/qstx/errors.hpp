#pragma once

#include <stdexcept>

namespace qstx {

// Precondition violation: bad dimensions, out-of-range parameters,
// malformed configuration.  The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tensor construction exceeding the global dimension cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File output failure.  The CLI maps this to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qstx
