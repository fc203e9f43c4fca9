#pragma once

#include <vector>

#include "eisp/rat.hpp"

namespace eisp {

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_poly(int N);
int euler_phi(int N);

// Element of Q(mu_N) in the power basis 1, mu, ..., mu^{phi(N)-1}, mu = e(1/N).
class Cyclo {
 public:
  explicit Cyclo(int N = 1);
  static Cyclo from_rat(int N, const Rat& q);
  static Cyclo root(int N, long j);  // mu_N^j

  int level() const { return N_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()

  // Same element viewed in Q(mu_M), N | M.
  Cyclo lift(int M) const;

  Cyclo inverse() const;
  // Complex conjugation mu -> mu^{-1}.
  Cyclo conj() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(const Rat& q);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, const Rat& q) { return a *= q; }
  friend Cyclo operator*(const Rat& q, Cyclo a) { return a *= q; }
  Cyclo operator-() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b);

 private:
  friend Cyclo cyclo_canonical(int N, const std::vector<Rat>& coeffs);
  int N_;
  std::vector<Rat> c_;
};

// Reduce a coefficient vector over mu^0..mu^{L-1} (any L) modulo Phi_N.
Cyclo cyclo_canonical(int N, const std::vector<Rat>& coeffs);

}  // namespace eisp
