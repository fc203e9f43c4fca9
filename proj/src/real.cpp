#include "eisp/real.hpp"

#include <algorithm>
#include <climits>

namespace eisp {

Real::Real(prec_t p) {
  mpfr_init2(v_, p);
  mpfr_set_zero(v_, 1);
}

Real::Real(long x, prec_t p) {
  mpfr_init2(v_, p);
  mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(double x, prec_t p) {
  mpfr_init2(v_, p);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(const Rat& x, prec_t p) {
  mpfr_init2(v_, p);
  mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Int& x, prec_t p) {
  mpfr_init2(v_, p);
  mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_prec(prec_t p) const {
  Real r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

void Real::grow(Real& t, const Real& o) {
  if (o.prec() > t.prec()) mpfr_prec_round(t.v_, o.prec(), MPFR_RNDN);
}

Real& Real::operator+=(const Real& o) {
  grow(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  grow(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  grow(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  grow(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long n) {
  mpfr_mul_si(v_, v_, n, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long n) {
  mpfr_div_si(v_, v_, n, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return LONG_MIN / 2;
  return mpfr_get_exp(v_);
}

Rat Real::to_rat() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string Real::hex() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real operator+(const Real& a, const Real& b) { Real r(a); return r += b; }
Real operator-(const Real& a, const Real& b) { Real r(a); return r -= b; }
Real operator*(const Real& a, const Real& b) { Real r(a); return r *= b; }
Real operator/(const Real& a, const Real& b) { Real r(a); return r /= b; }
Real operator*(const Real& a, long n) { Real r(a); return r *= n; }
Real operator*(long n, const Real& a) { Real r(a); return r *= n; }
Real operator/(const Real& a, long n) { Real r(a); return r /= n; }

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

namespace {

template <class F>
Real unary(const Real& x, F f) {
  Real r(x.prec());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real real_zeta(const Real& s) { return unary(s, mpfr_zeta); }
Real real_gamma(const Real& s) { return unary(s, mpfr_gamma); }

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real const_pi(prec_t p) {
  Real r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_euler(prec_t p) {
  Real r(p);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2(prec_t p) {
  Real r(p);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

}  // namespace eisp
