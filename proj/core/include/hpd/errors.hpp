#pragma once

#include <stdexcept>
#include <string>

namespace hpd {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested object would exceed the configured size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A mathematical precondition does not hold for otherwise well-formed input,
// e.g. a covariance that is not positive semidefinite. Exit code 1.
class CheckFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hpd
