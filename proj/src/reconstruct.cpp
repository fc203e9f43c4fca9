#include "eisp/specfun.hpp"

namespace eisp {

std::optional<Rat> rational_reconstruct(const BigComplex& z, const Int& den_bound, const Real& eps) {
  if (abs(z.im) >= eps) return std::nullopt;
  Rat x = z.re.to_rat();
  Int h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Rat best;
  bool have = false;
  for (;;) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Int h = a * h1 + h2;
    Int k = a * k1 + k2;
    if (k > den_bound) break;
    best = Rat(h, k);
    best.canonicalize();
    have = true;
    Rat frac = x - Rat(a);
    if (frac == 0) break;
    x = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  if (!have) return std::nullopt;
  Real resid = abs(z.re - Real(best, z.re.prec() + 64));
  if (resid >= eps) return std::nullopt;
  return best;
}

}  // namespace eisp
