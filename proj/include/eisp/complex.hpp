#pragma once

#include "eisp/real.hpp"

namespace eisp {

struct BigComplex {
  Real re;
  Real im;

  explicit BigComplex(prec_t p = 64) : re(p), im(p) {}
  BigComplex(Real r) : re(std::move(r)), im(re.prec()) {}  // NOLINT
  BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(const Rat& q, prec_t p) : re(q, p), im(p) {}

  prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
  BigComplex with_prec(prec_t p) const { return {re.with_prec(p), im.with_prec(p)}; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const Real& x);
  BigComplex& operator*=(long n);
  BigComplex& operator/=(const Real& x);
  BigComplex& operator/=(long n);
  BigComplex operator-() const { return {-re, -im}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const Real& x);
BigComplex operator*(const Real& x, BigComplex a);
BigComplex operator*(BigComplex a, long n);
BigComplex operator/(BigComplex a, const Real& x);
BigComplex operator/(BigComplex a, long n);

BigComplex conj(const BigComplex& z);
Real abs(const BigComplex& z);
Real norm(const BigComplex& z);  // |z|^2
Real arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex pow(const BigComplex& z, const BigComplex& w);  // exp(w log z)
// Real base x > 0 raised to complex power.
BigComplex pow(const Real& x, const BigComplex& w);
// i^n exactly.
BigComplex i_pow(long n, prec_t p);
BigComplex imag_unit(prec_t p);
// e(x) = exp(2 pi i x) for rational x.
BigComplex e_rat(const Rat& x, prec_t p);
// exp(2 pi i z).
BigComplex e_of(const BigComplex& z);

// max(|re|, |im|) as a cheap magnitude.
Real mag(const BigComplex& z);

}  // namespace eisp
