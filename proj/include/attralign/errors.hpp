#pragma once

#include <stdexcept>

namespace attralign {

// Error categories map onto CLI exit codes: IoError -> 1,
// ParseError/ValidationError -> 2, NumericalError -> 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace attralign
