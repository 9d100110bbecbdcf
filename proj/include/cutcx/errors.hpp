#pragma once

#include <stdexcept>
#include <string>

namespace cutcx {

// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or bitmask representation limit was exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A checked identity failed; the message carries the witness.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant of the library itself was broken.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cutcx
