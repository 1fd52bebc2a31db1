#pragma once

#include <stdexcept>
#include <string>

namespace sig {

// Generator could not produce a connected network within the retry budget.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative routine hit its iteration cap before reaching tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear system has no unique solution (zero total influence, disconnected input).
struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched sizes between networks, allocations, references or states.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace sig
