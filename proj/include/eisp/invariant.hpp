#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eisp/complex.hpp"
#include "eisp/modgroup.hpp"

namespace eisp {

// Polynomial in commuting tau, tau-bar: (exponent of tau, exponent of tau-bar) -> coefficient.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly monomial(int a, int b, const Rat& c = Rat(1));

  const std::map<Key, Rat>& terms() const { return t_; }
  Rat coeff(int a, int b) const;
  void add(int a, int b, const Rat& c);
  bool is_zero() const { return t_.empty(); }

  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  BigComplex eval(const BigComplex& tau, prec_t p) const;

 private:
  std::map<Key, Rat> t_;  // no zero coefficients
};

std::string to_string(const BiPoly& p);

// D_k^+ (tau^a taubar^b) = (k + a) tau^a taubar^b - a tau^{a-1} taubar^{b+1}
BiPoly maass_raise(int k, const BiPoly& p);

// D_{-m} o ... o D_{-2m+2} applied one operator at a time.
BiPoly dd_m_iterated(int m, const BiPoly& p);

// Closed form of the composite operator on tau^n, 0 <= n <= 2m-1.
BiPoly dd_m_poly(int m, int n);

// Homogeneous degree m-1 polynomial Q(X, Y, Z) with
// dd_m(tau^n) = (tau - taubar)^{m-1} Q(1/(tau-taubar), (tau+taubar)/(tau-taubar), tau taubar/(tau-taubar)).
using SymForm = std::map<std::array<int, 3>, Rat>;
SymForm dd_m_symmetric_form(int m, int n);
BiPoly expand_symmetric_form(int m, const SymForm& q);

struct QuadLatticeData {
  long a = 1, b = 0, c = 1;  // primitive minimal polynomial of tau, a > 0
  Rat omega2 = 1;
  ResiduePair lambda;  // carries the level
  std::string preset;

  int level() const { return lambda.N; }
  long discriminant() const { return b * b - 4 * a * c; }
  BigComplex tau(prec_t p) const;
  Real volume(prec_t p) const;  // omega2^2 Im tau
  void validate() const;
};

QuadLatticeData preset_gaussian();
QuadLatticeData preset_eisenstein();
std::optional<QuadLatticeData> preset_by_name(const std::string& name);

// Eichler integral with base point at infinity of the raw series e_k(lambda, N).
BigComplex eichler_integral(int k, const ResiduePair& lambda, const BigComplex& tau, long M, prec_t p);

struct PsiValue {
  int m = 0;
  QuadLatticeData data;
  ResiduePair lambda;
  BigComplex tau;
  BigComplex value;
  prec_t prec = 0;
  long M = 0;
  double tail_bound = 0;  // estimate of the dropped Fourier tail
};

PsiValue psi(int m, const QuadLatticeData& data, const ResiduePair& lambda, const BigComplex& tau, long M, prec_t p);

// Real or imaginary part according as m is odd or even.
Real re_m(const BigComplex& z, int m);

// [Psi(g tau, lambda g^{-1}) - Psi(tau, lambda)] / (2 pi i)^m at tau = tau(data).
BigComplex psi_shift(int m, const QuadLatticeData& data, const ResiduePair& lambda, const Mat2& g, long M, prec_t p);

// omega2^{-2m} e_{m,m}(tau(data), lambda, N), the elliptic lattice value.
BigComplex lattice_value(int m, const QuadLatticeData& data, const ResiduePair& lambda, prec_t p);

// re_m(Psi) pi^m / (|D|^{m-1/2} psi_r)
BigComplex psi_value_ratio(int m, const QuadLatticeData& data, const ResiduePair& lambda, long M, prec_t p);

struct HeckeClass {
  QuadLatticeData data;
  ResiduePair lambda_r;
  Rat norm_b = 1;
  BigComplex chi;
};

BigComplex hecke_assemble(int m, int delta, const std::vector<HeckeClass>& classes, long w_f, prec_t p);

}  // namespace eisp
