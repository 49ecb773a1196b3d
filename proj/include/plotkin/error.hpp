#pragma once

#include <stdexcept>
#include <string>

namespace plotkin {

// Base of everything the library throws for bad input (length mismatches,
// empty codes, caps exceeded). Logic errors inside the library use assert.
class code_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class length_mismatch : public code_error {
 public:
  length_mismatch(std::size_t a, std::size_t b)
      : code_error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class cap_exceeded : public code_error {
 public:
  using code_error::code_error;
};

}  // namespace plotkin
