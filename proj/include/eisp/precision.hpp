#pragma once

#include "eisp/real.hpp"

namespace eisp {

struct PrecisionBudget {
  prec_t bits = 192;
  long fourier_terms = 200;   // M
  long lattice_radius = 400;  // R
  long log2_tol = -128;       // tolerance 2^{log2_tol}

  Real tol() const { return ldexp(Real(1L, bits), log2_tol); }
};

constexpr prec_t kDefaultPrec = 192;

// Extra bits carried internally by every numeric routine.
constexpr prec_t kGuardBits = 32;

}  // namespace eisp
