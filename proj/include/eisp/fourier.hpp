#pragma once

#include <map>
#include <vector>

#include "eisp/complex.hpp"
#include "eisp/cyclo.hpp"
#include "eisp/modgroup.hpp"

namespace eisp {

// Exact expansion of the normalized series e_k(lambda, N) / (-2 pi i)^k in
// powers of q_N = e(tau/N).
struct HoloFourier {
  int k = 0;
  int N = 1;
  ResiduePair lambda;
  long M = 0;
  Rat constant;
  std::vector<Cyclo> coeffs;  // coeffs[j-1] multiplies q_N^j
  bool nonholo = false;
  Rat nonholo_coeff;  // multiplies 1/(4 pi v)
};

// Numeric holomorphic expansion (raw normalization): A0 + inv_v / v + sum A_j q_N^j.
struct NumericHolo {
  int k = 0;
  int N = 1;
  ResiduePair lambda;
  long M = 0;
  BigComplex A0;
  BigComplex inv_v;
  std::vector<BigComplex> A;
};

// Laurent polynomial in 1/v: exponent e -> coefficient of v^{-e}.
using VPoly = std::map<int, BigComplex>;

struct MaassFourier {
  int k = 0, l = 0;
  int N = 1;
  ResiduePair lambda;
  long M = 0;
  bool elliptic = false;
  BigComplex A0;
  BigComplex C0;  // coefficient of v^{1-w}
  std::vector<VPoly> A;  // A[j-1] multiplies q_N^j
  std::vector<VPoly> C;  // C[j-1] multiplies conj(q_N)^j
};

// Divisors of 1..M, each list ascending; shared read-only table.
const std::vector<std::vector<long>>& divisor_table(long M);

HoloFourier e_fourier(int k, const ResiduePair& lambda, long M);
NumericHolo g_fourier(int k, const ResiduePair& lambda, long M, prec_t p);
MaassFourier maass_fourier(int k, int l, const ResiduePair& lambda, long M, prec_t p);
MaassFourier elliptic_maass_fourier(int k, int l, const ResiduePair& lambda, long M, prec_t p);

// (-2 pi i)^k
BigComplex raw_scale(int k, prec_t p);

// Exact series as a numeric expansion; raw multiplies by (-2 pi i)^k.
NumericHolo to_numeric(const HoloFourier& f, prec_t p, bool raw = true);

BigComplex eval_fourier(const HoloFourier& f, const BigComplex& tau, prec_t p);
BigComplex eval_fourier(const NumericHolo& f, const BigComplex& tau, prec_t p);
BigComplex eval_fourier(const MaassFourier& f, const BigComplex& tau, prec_t p);

// Hurwitz zeta with zeta*(0, s) := zeta(1, s).
BigComplex zeta_star(const Rat& x, const BigComplex& s, prec_t p);

}  // namespace eisp
