#pragma once

#include <stdexcept>
#include <string>

namespace graphonlab {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested operation exceeds a brute-force cutoff or an unsupported method
// was selected for the given instance.
class unsupported_error : public error {
 public:
  using error::error;
};

// The conditioning event has (numerically) zero probability mass: rejection
// sampling exhausted its tries, or a conditional density is degenerate.
class zero_mass_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

}  // namespace graphonlab
