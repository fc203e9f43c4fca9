#pragma once

#include <string>
#include <vector>

#include "eisp/complex.hpp"
#include "eisp/ext_scalar.hpp"
#include "eisp/modgroup.hpp"

namespace eisp {

// Polynomial of degree <= k-2 in X with ExtScalar coefficients; coeffs[i] multiplies X^i.
class PeriodPoly {
 public:
  PeriodPoly() = default;
  explicit PeriodPoly(int k);
  PeriodPoly(int k, std::vector<ExtScalar> coeffs);

  int weight() const { return k_; }
  int degree_bound() const { return k_ - 2; }
  const std::vector<ExtScalar>& coeffs() const { return c_; }
  ExtScalar& operator[](int i) { return c_[i]; }
  const ExtScalar& operator[](int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const;

  PeriodPoly& operator+=(const PeriodPoly& o);
  PeriodPoly& operator-=(const PeriodPoly& o);
  PeriodPoly& operator*=(const Rat& q);
  friend PeriodPoly operator+(PeriodPoly a, const PeriodPoly& b) { return a += b; }
  friend PeriodPoly operator-(PeriodPoly a, const PeriodPoly& b) { return a -= b; }
  friend PeriodPoly operator*(PeriodPoly a, const Rat& q) { return a *= q; }
  PeriodPoly operator-() const { return *this * Rat(-1); }
  friend bool operator==(const PeriodPoly& a, const PeriodPoly& b) { return a.k_ == b.k_ && a.c_ == b.c_; }

  // P|g = (cX+d)^{k-2} P((aX+b)/(cX+d))
  PeriodPoly act(const Mat2& g) const;

  std::vector<BigComplex> numeric(prec_t p) const;

 private:
  int k_ = 2;
  std::vector<ExtScalar> c_;
};

// Rational polynomial (coefficient list, X^0 first) lifted to a PeriodPoly.
PeriodPoly rational_poly(int k, const std::vector<Rat>& coeffs);

std::string to_string(const PeriodPoly& p);

}  // namespace eisp
