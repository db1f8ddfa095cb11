#pragma once

#include <stdexcept>

namespace qtda {

// Malformed or out-of-contract input data (CLI exit code 3).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure: solver breakdown, size guard exceeded (CLI exit code 4).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtda
