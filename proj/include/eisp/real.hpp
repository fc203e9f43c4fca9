#pragma once

#include <mpfr.h>

#include <string>

#include "eisp/rat.hpp"

namespace eisp {

using prec_t = mpfr_prec_t;

// MPFR real carrying its own precision. Binary operations round to the larger
// of the two operand precisions.
class Real {
 public:
  explicit Real(prec_t p = 64);
  Real(long x, prec_t p);
  Real(int x, prec_t p) : Real(static_cast<long>(x), p) {}
  Real(double x, prec_t p);
  Real(const Rat& x, prec_t p);
  Real(const Int& x, prec_t p);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  // Same value rounded to precision p.
  Real with_prec(prec_t p) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long n);
  Real& operator/=(long n);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with 2^{e-1} <= |x| < 2^e; very negative for zero.
  long exponent() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rat to_rat() const;  // exact
  std::string hex() const;

 private:
  mpfr_t v_;
  static void grow(Real& target, const Real& other);
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long n);
Real operator*(long n, const Real& a);
Real operator/(const Real& a, long n);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);  // x * 2^e
Real max(const Real& a, const Real& b);

Real const_pi(prec_t p);
Real const_euler(prec_t p);
Real const_log2(prec_t p);
Real real_zeta(const Real& s);
Real real_gamma(const Real& s);

}  // namespace eisp
