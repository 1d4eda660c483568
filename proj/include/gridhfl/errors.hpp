#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridhfl {

/// Malformed or out-of-contract input (CLI exit code 1).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured resource cap (CLI exit code 2).
/// Carries the grid number and the generator count that triggered it.
class ResourceCapError : public std::runtime_error {
 public:
  ResourceCapError(const std::string& what, int grid_number, int cap, double generator_estimate)
      : std::runtime_error(what),
        grid_number_(grid_number),
        cap_(cap),
        generator_estimate_(generator_estimate) {}

  int grid_number() const noexcept { return grid_number_; }
  int cap() const noexcept { return cap_; }
  double generator_estimate() const noexcept { return generator_estimate_; }

 private:
  int grid_number_;
  int cap_;
  double generator_estimate_;
};

/// An internal mathematical invariant failed (CLI exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gridhfl
