#pragma once
#include <stdexcept>
#include <string>

namespace ttlm {

// Shape disagreement between operands.
struct dim_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scalar argument outside its contract (h < 1, R > d, step < 1, ...).
struct arg_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct bounds_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Invalid run/model configuration; message lists the violations.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed persisted file; message names the offending field.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value where a finite one is required.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ttlm
