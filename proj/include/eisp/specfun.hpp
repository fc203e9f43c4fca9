#pragma once

#include <optional>

#include "eisp/complex.hpp"
#include "eisp/cyclo.hpp"
#include "eisp/ext_scalar.hpp"

namespace eisp {

struct Evaluated {
  BigComplex value;
  Real error_bound;  // analytic estimate of the absolute truncation error
};

// B_n as a Real, cached per (n, precision).
Real bernoulli_real(int n, prec_t p);

// Hurwitz zeta(a, s), a > 0 rational, via Euler-Maclaurin; continued to all s != 1.
Evaluated hurwitz_zeta_ex(const Rat& a, const BigComplex& s, prec_t p);
BigComplex hurwitz_zeta(const Rat& a, const BigComplex& s, prec_t p);
// lim_{s->1} (zeta(a, s) - 1/(s-1)) = -digamma(a).
Real hurwitz_regular_part(const Rat& a, prec_t p);

// Lerch phi(x, a, s) = sum_{n>=0} e(nx) (n+a)^{-s}, continued in s.
BigComplex lerch_phi(const Rat& x, const Rat& a, const BigComplex& s, prec_t p);

// Li_s(e(x)) for complex s (continued); x in [0, 1).
BigComplex polylog_s(const Rat& x, const BigComplex& s, prec_t p);
// Li_w(e(x)) for integer w >= 1.
BigComplex polylog(int w, const Rat& x, prec_t p);

BigComplex log_gamma(const BigComplex& z, prec_t p);
BigComplex gamma(const BigComplex& z, prec_t p);

// Upper incomplete gamma Gamma(s, x) for x > 0.
BigComplex upper_gamma(const BigComplex& s, const Real& x, prec_t p);
Real upper_gamma_int(long a, const Real& x, prec_t p);

// Numeric values of exact objects.
BigComplex pl_value(const PolylogSymbol& s, prec_t p);
BigComplex ext_value(const ExtScalar& x, prec_t p);
BigComplex cyclo_value(const Cyclo& c, prec_t p);

// Continued-fraction reconstruction: the last convergent with denominator
// <= den_bound, accepted iff |z - p/q| < eps and |Im z| < eps.
std::optional<Rat> rational_reconstruct(const BigComplex& z, const Int& den_bound, const Real& eps);

}  // namespace eisp
