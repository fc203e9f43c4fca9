#include "eisp/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "eisp/bernoulli.hpp"
#include "eisp/errors.hpp"
#include "eisp/precision.hpp"

namespace eisp {

namespace {

std::mutex g_bern_real_mutex;
std::map<std::pair<int, prec_t>, Real> g_bern_real;

bool is_exact_int(const BigComplex& s, long* n) {
  if (!s.im.is_zero() || !mpfr_integer_p(s.re.get())) return false;
  if (!mpfr_fits_slong_p(s.re.get(), MPFR_RNDN)) return false;
  *n = mpfr_get_si(s.re.get(), MPFR_RNDN);
  return true;
}

Real tiny(prec_t p) { return ldexp(Real(1L, p), -4 * static_cast<long>(p)); }

BigComplex complex_sin(const BigComplex& z) {
  // sin z = (e^{iz} - e^{-iz}) / 2i
  BigComplex iz(-z.im, z.re);
  BigComplex a = exp(iz);
  BigComplex b = exp(-iz);
  BigComplex d = a - b;
  return BigComplex(d.im / 2L, -d.re / 2L);
}

}  // namespace

Real bernoulli_real(int n, prec_t p) {
  std::lock_guard<std::mutex> lk(g_bern_real_mutex);
  auto key = std::make_pair(n, p);
  auto it = g_bern_real.find(key);
  if (it != g_bern_real.end()) return it->second;
  Real r(bernoulli_number(n), p);
  g_bern_real.emplace(key, r);
  return r;
}

Evaluated hurwitz_zeta_ex(const Rat& a, const BigComplex& s, prec_t p) {
  if (a <= 0) throw PreconditionError("Hurwitz parameter must be positive");
  if (s.im.is_zero() && s.re == Real(1L, 2)) throw PoleError("Hurwitz zeta pole at s = 1");
  double sa = abs(s).to_double();
  double sigma = s.re.to_double();
  long M = 12 + static_cast<long>(std::ceil(sa)) + static_cast<long>(p) / 8;
  for (int attempt = 0; attempt < 4; ++attempt, M *= 2) {
    prec_t guard = kGuardBits + 8;
    if (sigma < 1) guard += static_cast<prec_t>(std::ceil((1 - sigma) * std::log2(M + a.get_d() + 2)));
    prec_t wp = p + guard;
    BigComplex sw = s.with_prec(wp);
    BigComplex total(wp);
    bool real_s = sw.im.is_zero();
    for (long n = 0; n < M; ++n) {
      Real L = log(Real(Rat(a + n), wp));
      if (real_s) {
        total.re += exp(-sw.re * L);
      } else {
        total += exp(BigComplex(-sw.re * L, -sw.im * L));
      }
    }
    Real X(Rat(a + M), wp);
    Real lx = log(X);
    BigComplex Xs = exp(BigComplex(-sw.re * lx, -sw.im * lx));  // X^{-s}
    BigComplex one(Real(1L, wp));
    total += (Xs * X) / (sw - one);
    total += Xs / 2L;
    BigComplex poch = sw;
    BigComplex Xpow = Xs / X;
    Real X2 = X * X;
    Real eps = ldexp(Real(1L, wp), -static_cast<long>(wp));
    Real eps2 = ldexp(Real(1L, wp), -2 * static_cast<long>(wp));
    Real last(wp);
    Real prev_mag(wp);
    bool converged = false;
    for (int j = 1; j <= 4 * M; ++j) {
      Real coef = bernoulli_real(2 * j, wp) / Real(factorial(2 * j), wp);
      BigComplex term = poch * Xpow * coef;
      total += term;
      Real tm = mag(term);
      if (tm.is_zero() || tm <= eps * mag(total) || tm <= eps2) {
        last = tm;
        converged = true;
        break;
      }
      if (j > 2 && tm > prev_mag) break;  // asymptotic series turned; enlarge M
      prev_mag = tm;
      BigComplex f1 = sw + BigComplex(Real(2L * j - 1, wp));
      BigComplex f2 = sw + BigComplex(Real(2L * j, wp));
      poch *= f1 * f2;
      if (poch.is_zero()) {
        last = Real(0L, wp);
        converged = true;
        break;
      }
      Xpow /= X2;
    }
    if (!converged) continue;
    Real bound = last * 2L + eps * mag(total);
    return {total.with_prec(p), bound.with_prec(p)};
  }
  throw PrecisionBudgetError("Euler-Maclaurin summation did not converge");
}

BigComplex hurwitz_zeta(const Rat& a, const BigComplex& s, prec_t p) {
  return hurwitz_zeta_ex(a, s, p).value;
}

Real hurwitz_regular_part(const Rat& a, prec_t p) {
  if (a <= 0) throw PreconditionError("Hurwitz parameter must be positive");
  long M = 12 + static_cast<long>(p) / 8;
  prec_t wp = p + kGuardBits + 8;
  Real total(wp);
  for (long n = 0; n < M; ++n) total += Real(1L, wp) / Real(Rat(a + n), wp);
  Real X(Rat(a + M), wp);
  total -= log(X);
  total += Real(1L, wp) / (X * 2L);
  Real X2 = X * X;
  Real Xp = Real(1L, wp) / X2;
  Real eps = ldexp(Real(1L, wp), -static_cast<long>(wp));
  for (int j = 1; j <= 4 * M; ++j) {
    Real term = bernoulli_real(2 * j, wp) * Xp / (2L * j);
    total += term;
    if (abs(term) <= eps * abs(total)) break;
    Xp /= X2;
  }
  return total.with_prec(p);
}

BigComplex lerch_phi(const Rat& x, const Rat& a, const BigComplex& s, prec_t p) {
  Rat f = frac_part(x);
  if (f == 0) return hurwitz_zeta(a, s, p);
  long q = f.get_den().get_si();
  prec_t wp = p + kGuardBits;
  bool at_one = s.im.is_zero() && s.re == Real(1L, 2);
  BigComplex total(wp);
  for (long j = 0; j < q; ++j) {
    Rat b = (a + j) / q;
    BigComplex ph = e_rat(f * j, wp);
    if (at_one) {
      total += ph * hurwitz_regular_part(b, wp);
    } else {
      total += ph * hurwitz_zeta(b, s.with_prec(wp), wp);
    }
  }
  if (at_one) {
    total /= q;
  } else {
    total *= pow(Real(q, wp), -s.with_prec(wp));
  }
  return total.with_prec(p);
}

BigComplex polylog_s(const Rat& x, const BigComplex& s, prec_t p) {
  Rat f = frac_part(x);
  if (f == 0) {
    if (s.im.is_zero() && s.re == Real(1L, 2)) throw DivergenceError("Li_1(1) diverges");
    return hurwitz_zeta(Rat(1), s, p);
  }
  prec_t wp = p + kGuardBits;
  return (e_rat(f, wp) * lerch_phi(f, Rat(1), s.with_prec(wp), wp)).with_prec(p);
}

BigComplex polylog(int w, const Rat& x, prec_t p) {
  if (w < 1) throw PreconditionError("polylog weight must be positive");
  Rat f = frac_part(x);
  if (w == 1) {
    if (f == 0) throw DivergenceError("Li_1(1) diverges");
    prec_t wp = p + kGuardBits;
    BigComplex one(Real(1L, wp));
    return (-log(one - e_rat(f, wp))).with_prec(p);
  }
  return polylog_s(f, BigComplex(Real(static_cast<long>(w), p)), p);
}

BigComplex log_gamma(const BigComplex& z, prec_t p) {
  long n;
  if (is_exact_int(z, &n) && n <= 0) throw PoleError("Gamma pole at nonpositive integer");
  prec_t wp = p + kGuardBits;
  BigComplex zw = z.with_prec(wp);
  Real half(Rat(1, 2), wp);
  if (zw.re < half) {
    // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    Real pi = const_pi(wp);
    BigComplex one(Real(1L, wp));
    BigComplex r = BigComplex(log(pi)) - log(complex_sin(zw * pi)) - log_gamma(one - zw, wp);
    return r.with_prec(p);
  }
  double z0 = 0.12 * static_cast<double>(wp) + 10;
  long shift = 0;
  double re = zw.re.to_double();
  if (re < z0) shift = static_cast<long>(std::ceil(z0 - re));
  BigComplex w = zw + BigComplex(Real(shift, wp));
  BigComplex lw = log(w);
  BigComplex lg = (w - BigComplex(half)) * lw - w + BigComplex(log(ldexp(const_pi(wp), 1)) / 2L);
  BigComplex winv = BigComplex(Real(1L, wp)) / w;
  BigComplex winv2 = winv * winv;
  BigComplex wp_pow = winv;
  Real eps = ldexp(Real(1L, wp), -static_cast<long>(wp));
  for (int j = 1; j < 4 * wp; ++j) {
    BigComplex term = wp_pow * (bernoulli_real(2 * j, wp) / Real(2L * j * (2L * j - 1), wp));
    lg += term;
    if (mag(term) <= eps * mag(lg)) break;
    wp_pow *= winv2;
  }
  for (long i = 0; i < shift; ++i) lg -= log(zw + BigComplex(Real(i, wp)));
  return lg.with_prec(p);
}

BigComplex gamma(const BigComplex& z, prec_t p) {
  long n;
  if (is_exact_int(z, &n) && n <= 0) throw PoleError("Gamma pole at nonpositive integer");
  if (z.im.is_zero()) return BigComplex(real_gamma(z.re.with_prec(p)));
  prec_t wp = p + kGuardBits;
  return exp(log_gamma(z, wp)).with_prec(p);
}

namespace {

// Legendre continued fraction for Gamma(s, x), modified Lentz.
BigComplex upper_gamma_cf(const BigComplex& s, const Real& x, prec_t wp) {
  BigComplex xs(x);
  BigComplex one(Real(1L, wp));
  Real tn = tiny(wp);
  auto nz = [&](BigComplex& v) {
    if (mag(v) < tn) v = BigComplex(tn);
  };
  BigComplex f = xs + one - s;
  nz(f);
  BigComplex C = f;
  BigComplex D(wp);
  Real eps = ldexp(Real(1L, wp), -static_cast<long>(wp));
  for (long n = 1; n < 100000; ++n) {
    BigComplex an = -(BigComplex(Real(n, wp)) * (BigComplex(Real(n, wp)) - s));
    BigComplex bn = xs + BigComplex(Real(2L * n + 1, wp)) - s;
    D = bn + an * D;
    nz(D);
    C = bn + an / C;
    nz(C);
    D = one / D;
    BigComplex delta = C * D;
    f *= delta;
    if (mag(delta - one) < eps) break;
  }
  BigComplex pre = exp(BigComplex(-x) + s * log(x));
  return pre / f;
}

// Lower incomplete gamma gamma(s, x) by its power series.
BigComplex lower_gamma_series(const BigComplex& s, const Real& x, prec_t wp) {
  BigComplex term = BigComplex(Real(1L, wp)) / s;
  BigComplex sum = term;
  Real eps = ldexp(Real(1L, wp), -static_cast<long>(wp));
  double xd = x.to_double();
  for (long n = 1; n < 100000; ++n) {
    term = term * x / (s + BigComplex(Real(n, wp)));
    sum += term;
    if (n > xd && mag(term) <= eps * mag(sum)) break;
  }
  return sum * exp(BigComplex(-x) + s * log(x));
}

}  // namespace

Real upper_gamma_int(long a, const Real& x, prec_t p) {
  if (x.sign() <= 0) throw PreconditionError("incomplete gamma needs x > 0");
  if (a >= 1) {
    prec_t wp = p + kGuardBits;
    Real xw = x.with_prec(wp);
    Real term(1L, wp);
    Real sum(1L, wp);
    for (long j = 1; j < a; ++j) {
      term = term * xw / j;
      sum += term;
    }
    return (Real(factorial(a - 1), wp) * exp(-xw) * sum).with_prec(p);
  }
  double xd = x.to_double();
  if (xd > 30.0 + static_cast<double>(-a)) {
    prec_t wp = p + kGuardBits;
    return upper_gamma_cf(BigComplex(Real(a, wp)), x.with_prec(wp), wp).re.with_prec(p);
  }
  // E_1 then Gamma(b, x) = (Gamma(b+1, x) - x^b e^{-x}) / b downwards
  prec_t wp = p + kGuardBits + static_cast<prec_t>(-a * (std::log2(xd + 2.0) + 2.0));
  Real xw = x.with_prec(wp);
  Real g(wp);
  mpfr_eint(g.get(), (-xw).get(), MPFR_RNDN);
  g = -g;
  Real ex = exp(-xw);
  for (long b = -1; b >= a; --b) g = (g - pow(xw, b) * ex) / b;
  return g.with_prec(p);
}

BigComplex upper_gamma(const BigComplex& s, const Real& x, prec_t p) {
  if (x.sign() <= 0) throw PreconditionError("incomplete gamma needs x > 0");
  long n;
  if (is_exact_int(s, &n)) return BigComplex(upper_gamma_int(n, x, p));
  double xd = x.to_double();
  double sa = abs(s).to_double();
  if (xd > 30.0 + sa) {
    prec_t wp = p + kGuardBits;
    return upper_gamma_cf(s.with_prec(wp), x.with_prec(wp), wp).with_prec(p);
  }
  prec_t wp = p + kGuardBits + static_cast<prec_t>(3.0 * xd + 8);
  BigComplex sw = s.with_prec(wp);
  BigComplex r = gamma(sw, wp) - lower_gamma_series(sw, x.with_prec(wp), wp);
  return r.with_prec(p);
}

BigComplex pl_value(const PolylogSymbol& s, prec_t p) {
  prec_t wp = p + kGuardBits;
  BigComplex li = polylog(s.weight, s.arg, wp);
  BigComplex m2pii(Real(wp), -ldexp(const_pi(wp), 1));
  return (li / pow(m2pii, static_cast<long>(s.weight))).with_prec(p);
}

BigComplex ext_value(const ExtScalar& x, prec_t p) {
  prec_t wp = p + kGuardBits;
  BigComplex r(Real(x.rational_part(), wp));
  for (const auto& [sym, c] : x.symbol_terms()) r += pl_value(sym, wp) * Real(c, wp);
  return r.with_prec(p);
}

BigComplex cyclo_value(const Cyclo& c, prec_t p) {
  prec_t wp = p + kGuardBits;
  BigComplex r(wp);
  const auto& co = c.coeffs();
  for (std::size_t j = 0; j < co.size(); ++j) {
    if (co[j] == 0) continue;
    r += e_rat(Rat(static_cast<long>(j), c.level()), wp) * Real(co[j], wp);
  }
  return r.with_prec(p);
}

}  // namespace eisp
