#include "eisp/lattice.hpp"

#include <cmath>

#include "eisp/errors.hpp"
#include "eisp/precision.hpp"
#include "eisp/specfun.hpp"

namespace eisp {

namespace {

struct Vec {
  Real x, y;
};

Vec add(const Vec& a, const Vec& b) { return {a.x + b.x, a.y + b.y}; }
Vec scale(const Vec& a, long n) { return {a.x * Real(n, a.x.prec()), a.y * Real(n, a.y.prec())}; }

BigComplex poly_at(const Vec& v, int k, int l) {
  BigComplex z(v.x, v.y);
  if (k >= l) return pow(conj(z), static_cast<long>(k - l));
  return pow(z, static_cast<long>(l - k));
}

template <class F>
void for_shell(long rho, F&& f) {
  if (rho == 0) {
    f(0L, 0L);
    return;
  }
  for (long i = -rho; i <= rho; ++i) {
    f(i, -rho);
    f(i, rho);
  }
  for (long j = -rho + 1; j <= rho - 1; ++j) {
    f(-rho, j);
    f(rho, j);
  }
}

BigComplex direct_sum(const LatticeParams& lp, const BigComplex& tau, prec_t wp) {
  const int N = lp.lambda.N;
  BigComplex tb = conj(tau);
  BigComplex acc(wp);
  for (long c = -lp.R; c <= lp.R; ++c) {
    for (long d = -lp.R; d <= lp.R; ++d) {
      if (c == 0 && d == 0) continue;
      BigComplex chi(Real(1L, wp));
      if (lp.kind == LatticeKind::Congruence) {
        if (mod(c - lp.lambda.l1, N) != 0 || mod(d - lp.lambda.l2, N) != 0) continue;
      } else {
        chi = e_rat(make_rat(c * lp.lambda.l2 - d * lp.lambda.l1, N), wp);
      }
      BigComplex z = tau * c + BigComplex(Real(d, wp));
      BigComplex den = pow(z, static_cast<long>(lp.k));
      if (lp.l) den *= pow(tb * c + BigComplex(Real(d, wp)), static_cast<long>(lp.l));
      acc += chi / den;
    }
  }
  return acc;
}

// Lattice basis with the integer change of basis back to the starting one:
// v_i = U[i][0] e_1 + U[i][1] e_2.
struct Basis {
  Vec v1, v2;
  long U[2][2] = {{1, 0}, {0, 1}};
};

Real dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

// Lagrange-Gauss reduction.
void reduce(Basis& B) {
  for (;;) {
    if (dot(B.v1, B.v1) > dot(B.v2, B.v2)) {
      std::swap(B.v1, B.v2);
      std::swap(B.U[0][0], B.U[1][0]);
      std::swap(B.U[0][1], B.U[1][1]);
    }
    Real mu = dot(B.v1, B.v2) / dot(B.v1, B.v1);
    double md = mu.to_double();
    if (std::fabs(md) <= 0.5) return;
    long m = std::lround(md);
    B.v2 = add(B.v2, scale(B.v1, -m));
    B.U[1][0] -= m * B.U[0][0];
    B.U[1][1] -= m * B.U[0][1];
  }
}

// Subtracts the lattice vector nearest below x in the basis coordinates.
Vec reduce_mod(const Vec& x, const Basis& B) {
  Real det = B.v1.x * B.v2.y - B.v1.y * B.v2.x;
  Real c1 = (x.x * B.v2.y - x.y * B.v2.x) / det;
  Real c2 = (B.v1.x * x.y - B.v1.y * x.x) / det;
  long n1 = std::lround(std::floor(c1.to_double()));
  long n2 = std::lround(std::floor(c2.to_double()));
  return add(x, add(scale(B.v1, -n1), scale(B.v2, -n2)));
}

template <class Term>
BigComplex shell_sum(const Basis& B, const Vec& shift, long cap, prec_t wp, const char* what, Term&& term) {
  BigComplex acc(wp);
  Real scale_max(1L, wp);
  int quiet = 0;
  for (long rho = 0;; ++rho) {
    if (rho > cap) throw PrecisionBudgetError(std::string("Ewald ") + what + " part did not converge within the shell cap");
    Real shell_max(wp);
    for_shell(rho, [&](long i, long j) {
      Vec x = add(shift, add(scale(B.v1, i), scale(B.v2, j)));
      long c = i * B.U[0][0] + j * B.U[1][0];
      long d = i * B.U[0][1] + j * B.U[1][1];
      BigComplex t = term(x, c, d);
      acc += t;
      Real m = mag(t);
      if (m > shell_max) shell_max = m;
      if (m > scale_max) scale_max = m;
    });
    bool small = shell_max.is_zero() || shell_max.exponent() < scale_max.exponent() - static_cast<long>(wp);
    quiet = small ? quiet + 1 : 0;
    if (rho >= 2 && quiet >= 2) break;
  }
  return acc;
}

BigComplex ewald_sum(const LatticeParams& lp, const BigComplex& tau, prec_t wp) {
  const int N = lp.lambda.N;
  const int k = lp.k, l = lp.l;
  const long s = std::max(k, l);
  const long n = std::abs(k - l);
  Real pi = const_pi(wp);
  Real u = tau.re, v = tau.im;
  Real zero(wp);

  // Lattice basis, shift a and dual shift b.
  Vec e1, e2, a{zero, zero}, b{zero, zero};
  bool zero_in_coset = true;
  const bool elliptic = lp.kind == LatticeKind::Elliptic;
  if (elliptic) {
    e1 = {u, v};
    e2 = {Real(1L, wp), zero};
    b.x = Real(make_rat(-lp.lambda.l1, N), wp);
    b.y = (Real(make_rat(lp.lambda.l2, N), wp) - u * b.x) / v;
  } else {
    Real rn(static_cast<long>(N), wp);
    e1 = {u * rn, v * rn};
    e2 = {rn, zero};
    a = {u * Real(static_cast<long>(lp.lambda.l1), wp) + Real(static_cast<long>(lp.lambda.l2), wp),
         v * Real(static_cast<long>(lp.lambda.l1), wp)};
    zero_in_coset = lp.lambda.is_zero();
  }
  Real det = e1.x * e2.y - e1.y * e2.x;
  Real vol = abs(det);
  Real t0 = Real(1L, wp) / vol;
  Real gamma_s = real_gamma(Real(s, wp));
  Real pis = pow(pi, s);

  Basis L{e1, e2};
  reduce(L);
  // Dual basis: <f_i, e_j> = delta_ij; the dual phases never need integer coordinates.
  Basis D{{e2.y / det, -e2.x / det}, {-e1.y / det, e1.x / det}};
  reduce(D);
  Vec a_red = elliptic ? a : reduce_mod(a, L);
  Vec b_red = elliptic ? reduce_mod(b, D) : b;

  BigComplex A = shell_sum(L, a_red, lp.R, wp, "direct", [&](const Vec& x, long c, long d) {
    Real r2 = dot(x, x);
    if (r2.is_zero()) return BigComplex(wp);
    BigComplex t = poly_at(x, k, l) * (upper_gamma_int(s, pi * t0 * r2, wp) / (gamma_s * pow(r2, s)));
    if (elliptic) t *= e_rat(make_rat(c * lp.lambda.l2 - d * lp.lambda.l1, N), wp);
    return t;
  });

  Vec mb{-b_red.x, -b_red.y};
  BigComplex B = shell_sum(D, mb, lp.R, wp, "dual", [&](const Vec& eta, long, long) {
    Real r2 = dot(eta, eta);
    BigComplex t(wp);
    if (r2.is_zero()) {
      if (n != 0) return t;
      t = BigComplex(pow(t0, s - 1) / Real(s - 1, wp));
    } else {
      Real y = pi * r2;
      t = poly_at(eta, k, l) * (pow(y, s - n - 1) * upper_gamma_int(n + 1 - s, y / t0, wp));
    }
    // e(<xi, a>), with xi = eta when b = 0
    if (!elliptic) t *= e_of(BigComplex(dot(eta, a)));
    return t;
  });
  B *= i_pow(-n, wp);
  B *= pis / (gamma_s * vol);
  if (zero_in_coset && n == 0) B -= BigComplex(pis * pow(t0, s) / (Real(s, wp) * gamma_s));
  return A + B;
}

}  // namespace

BigComplex lattice_sum(const LatticeParams& lp, const BigComplex& tau, prec_t p, LatticeMethod method) {
  if (lp.k < 0 || lp.l < 0 || lp.k + lp.l < 3) throw PreconditionError("lattice sum needs k + l >= 3");
  if (tau.im.sign() <= 0) throw PreconditionError("tau must lie in the upper half plane");
  prec_t wp = p + kGuardBits + 32;
  BigComplex t = tau.with_prec(wp);
  BigComplex r = method == LatticeMethod::Ewald ? ewald_sum(lp, t, wp) : direct_sum(lp, t, wp);
  return r.with_prec(p);
}

}  // namespace eisp
