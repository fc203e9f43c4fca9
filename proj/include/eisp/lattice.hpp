#pragma once

#include "eisp/complex.hpp"
#include "eisp/modgroup.hpp"

namespace eisp {

enum class LatticeKind { Congruence, Elliptic };
enum class LatticeMethod { Ewald, Direct };

struct LatticeParams {
  int k = 0, l = 0;
  ResiduePair lambda;
  LatticeKind kind = LatticeKind::Congruence;
  long R = 400;  // box radius for Direct, shell cap for Ewald
};

// Congruence: sum over (c, d) = lambda mod N, (c, d) != 0, of (c tau + d)^{-k} (c tau-bar + d)^{-l}.
// Elliptic: sum over (c, d) != 0 of e((c l2 - d l1)/N) (c tau + d)^{-k} (c tau-bar + d)^{-l}.
// Ewald splits the sum into two exponentially convergent pieces; Direct
// truncates the box max(|c|, |d|) <= R and has tail O(R^{2-w}).
BigComplex lattice_sum(const LatticeParams& lp, const BigComplex& tau, prec_t p,
                       LatticeMethod method = LatticeMethod::Ewald);

}  // namespace eisp
