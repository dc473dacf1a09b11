#pragma once

#include <stdexcept>

namespace ffhg {

/// An input outside an operation's domain: non-prime characteristic,
/// degenerate curve parameters, division by zero, malformed text. The CLI
/// maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form used outside the region where it is defined, such as the
/// single-sum F1 forms at xy = 0.
class OutOfDomain : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A quantity that must be a rational integer was not.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ffhg
