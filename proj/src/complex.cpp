#include "eisp/complex.hpp"

#include "eisp/errors.hpp"

namespace eisp {

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  Real d = o.re * o.re + o.im * o.im;
  if (d.is_zero()) throw PoleError("complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const Real& x) {
  re *= x;
  im *= x;
  return *this;
}

BigComplex& BigComplex::operator*=(long n) {
  re *= n;
  im *= n;
  return *this;
}

BigComplex& BigComplex::operator/=(const Real& x) {
  re /= x;
  im /= x;
  return *this;
}

BigComplex& BigComplex::operator/=(long n) {
  re /= n;
  im /= n;
  return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
BigComplex operator*(BigComplex a, const Real& x) { return a *= x; }
BigComplex operator*(const Real& x, BigComplex a) { return a *= x; }
BigComplex operator*(BigComplex a, long n) { return a *= n; }
BigComplex operator/(BigComplex a, const Real& x) { return a /= x; }
BigComplex operator/(BigComplex a, long n) { return a /= n; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

Real norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const BigComplex& z) {
  Real r(z.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  Real m = exp(z.re);
  Real s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.get(), c.get(), z.im.with_prec(z.prec()).get(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw PoleError("log of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re)) / 2L);
  if (z.re.sign() >= 0) return {a, z.im / (2L * a)};
  Real b = z.im.sign() >= 0 ? a : -a;
  return {abs(z.im) / (2L * a), b};
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) {
    BigComplex one(Real(1L, z.prec()));
    return one / pow(z, -n);
  }
  BigComplex r(Real(1L, z.prec()));
  BigComplex b = z;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

BigComplex pow(const Real& x, const BigComplex& w) {
  Real lx = log(x);
  return exp(w * lx);
}

BigComplex i_pow(long n, prec_t p) {
  switch (mod(n, 4)) {
    case 0: return {Real(1L, p), Real(0L, p)};
    case 1: return {Real(0L, p), Real(1L, p)};
    case 2: return {Real(-1L, p), Real(0L, p)};
    default: return {Real(0L, p), Real(-1L, p)};
  }
}

BigComplex imag_unit(prec_t p) { return i_pow(1, p); }

BigComplex e_rat(const Rat& x, prec_t p) {
  Rat f = frac_part(x);
  // exact values on the axes keep symmetric sums symmetric
  if (f == 0) return i_pow(0, p);
  if (f == Rat(1, 4)) return i_pow(1, p);
  if (f == Rat(1, 2)) return i_pow(2, p);
  if (f == Rat(3, 4)) return i_pow(3, p);
  Real t = Real(f, p + 16) * ldexp(const_pi(p + 16), 1);
  Real s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  return {c, s};
}

BigComplex e_of(const BigComplex& z) {
  Real twopi = ldexp(const_pi(z.prec()), 1);
  return exp(BigComplex(-z.im * twopi, z.re * twopi));
}

Real mag(const BigComplex& z) { return max(abs(z.re), abs(z.im)); }

}  // namespace eisp
