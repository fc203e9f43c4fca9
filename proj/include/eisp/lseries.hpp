#pragma once

#include <optional>

#include "eisp/ext_scalar.hpp"
#include "eisp/fourier.hpp"

namespace eisp {

// L*(e_k(lambda, N)/(-2 pi i)^k, r) = i^r * xi(), with
// xi = bernoulli_coeff + the two gated polylog contributions.
struct LValueClosed {
  int k = 0;
  ResiduePair lambda;
  int r = 0;
  Rat bernoulli_coeff;
  std::optional<std::pair<PolylogSymbol, Rat>> top_term;     // r = k-1, lambda1 = 0
  std::optional<std::pair<PolylogSymbol, Rat>> bottom_term;  // r = 1, lambda2 = 0

  ExtScalar xi() const;
  BigComplex value(prec_t p) const;  // normalized
};

LValueClosed lvalue_closed(int k, const ResiduePair& lambda, int r);

// A holomorphic form on Gamma(N) together with f|S^{-1}; both exact and normalized.
struct LFunctionSpec {
  HoloFourier f;
  HoloFourier g;  // f|S^{-1}
};

// Terms needed so that the termwise tail stays below 2^{-p}.
long lseries_terms(int k, int N, prec_t p);

// L-function data for e_k(lambda, N)/(-2 pi i)^k; M = 0 picks lseries_terms.
LFunctionSpec lspec_eisenstein(int k, const ResiduePair& lambda, long M = 0, prec_t p = 192);

// Completed L-function via the split at t = 1 with termwise incomplete gammas.
BigComplex lvalue_numeric(const LFunctionSpec& spec, const BigComplex& s, prec_t p);

// The same L* through the Lerch/Hurwitz product, normalized like lvalue_closed.
BigComplex lvalue_lerch_product(int k, const ResiduePair& lambda, const BigComplex& s, prec_t p);

}  // namespace eisp
