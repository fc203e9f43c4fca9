#pragma once

#include <stdexcept>

namespace eisp {

// Evaluation at a pole of a meromorphic function.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Divergent series or symbol, e.g. Li_1(1).
struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameter outside the admissible index set I_{N,k}.
struct IndexSetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The requested tolerance cannot be met within the precision budget.
struct PrecisionBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eisp
