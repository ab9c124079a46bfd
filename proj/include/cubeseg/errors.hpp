#ifndef CUBESEG_ERRORS_HPP
#define CUBESEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cubeseg {

// Exact arithmetic left the range of Count.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An argument is outside its documented domain (k > 2^n, r >= n, ...).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The caller violated a precondition that is not a simple range check.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input (vertex files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Splitting dimension leaves one side empty.
class DegenerateSplit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive search would scan more subsets than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubeseg

#endif  // CUBESEG_ERRORS_HPP
