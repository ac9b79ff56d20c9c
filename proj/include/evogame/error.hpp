#pragma once

#include <stdexcept>
#include <string>

namespace evogame {

// Exit codes of the command-line tool; each exception type maps onto one.
enum class ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kNumeric = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameter values, malformed states, invalid configuration.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The integrator left the unit cube or produced a non-finite state.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evogame
