#pragma once

#include <stdexcept>
#include <string>

namespace penergy {

// Precondition or input-format violation (bad order, non-symmetric entries,
// malformed graph6, out-of-range vertex set, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine gave up (e.g. QL did not converge in its sweep budget).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace penergy
