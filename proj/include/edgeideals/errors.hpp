#pragma once

#include <stdexcept>
#include <string>

namespace edgeideals {

// Raised for malformed inputs: unknown vertices, parse errors, parameters
// outside documented ranges. Everything else is a logic error.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace edgeideals
