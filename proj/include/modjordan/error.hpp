#pragma once

#include <stdexcept>
#include <string>

namespace modjordan {

// Bad arguments: non-prime p, r > s where r <= s is required, malformed input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact integer result would not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A configured resource guard (e.g. the oracle ceiling on r*s) was tripped.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested engine does not apply to the given parameters.
class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modjordan
