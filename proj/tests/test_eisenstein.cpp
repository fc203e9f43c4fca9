#include <random>

#include "doctest.h"
#include "eisp/errors.hpp"
#include "eisp/fourier.hpp"
#include "eisp/lattice.hpp"
#include "eisp/specfun.hpp"

using namespace eisp;

namespace {

constexpr prec_t P = 192;

BigComplex tau_of(const Rat& x, const Rat& y) { return BigComplex(Real(x, P), Real(y, P)); }

Real eps(double d) { return Real(d, P); }

BigComplex apply(const Mat2& g, const BigComplex& tau) {
  BigComplex num = tau * static_cast<long>(g.a) + BigComplex(Real(static_cast<long>(g.b), P));
  BigComplex den = tau * static_cast<long>(g.c) + BigComplex(Real(static_cast<long>(g.d), P));
  return num / den;
}

BigComplex automorphy(const Mat2& g, const BigComplex& tau, int k, int l) {
  BigComplex j = tau * static_cast<long>(g.c) + BigComplex(Real(static_cast<long>(g.d), P));
  return pow(j, static_cast<long>(k)) * pow(conj(j), static_cast<long>(l));
}

BigComplex maass_value(bool elliptic, int k, int l, const ResiduePair& lam, const BigComplex& tau, long M = 120) {
  auto f = elliptic ? elliptic_maass_fourier(k, l, lam, M, P) : maass_fourier(k, l, lam, M, P);
  return eval_fourier(f, tau, P);
}

}  // namespace

TEST_CASE("holomorphic expansion examples") {
  HoloFourier f = e_fourier(4, ResiduePair(1, 0, 0), 3);
  CHECK(f.constant == Rat(1, 720));
  CHECK(f.coeffs[0].rational_value() == Rat(1, 3));
  CHECK(f.coeffs[1].rational_value() == 3);
  CHECK(f.coeffs[2].rational_value() == Rat(28, 3));
  CHECK_FALSE(f.nonholo);

  HoloFourier g = e_fourier(2, ResiduePair(1, 0, 0), 2);
  CHECK(g.nonholo);
  CHECK(g.nonholo_coeff == 1);
  CHECK(g.constant == Rat(-1, 12));
  CHECK(g.coeffs[0].rational_value() == 2);
  CHECK(g.coeffs[1].rational_value() == 6);

  CHECK_THROWS_AS(e_fourier(3, ResiduePair(2, 1, 0), 5), IndexSetError);
  CHECK_THROWS_AS(e_fourier(5, ResiduePair(1, 0, 0), 5), IndexSetError);
}

TEST_CASE("Maass constant terms") {
  // elliptic (3, 1), trivial level: C0 = -pi zeta(3) / 2
  auto f = elliptic_maass_fourier(3, 1, ResiduePair(1, 0, 0), 4, P);
  Real want = -const_pi(P) * real_zeta(Real(3L, P)) / 2L;
  CHECK(abs(f.C0 - BigComplex(want)) < eps(1e-50));
  // elliptic (2, 2), (0, 1) mod 2: C0 = -(3 pi / 4) zeta(3)
  auto g = elliptic_maass_fourier(2, 2, ResiduePair(2, 0, 1), 4, P);
  Real want2 = -const_pi(P) * real_zeta(Real(3L, P)) * 3L / Real(4L, P);
  CHECK(abs(g.C0 - BigComplex(want2)) < eps(1e-50));
  // congruence holomorphic constant: sum over odd n of n^-4 = pi^4 / 96
  auto h = g_fourier(4, ResiduePair(2, 0, 1), 4, P);
  CHECK(abs(h.A0 - BigComplex(pow(const_pi(P), 4L) / 48L)) < eps(1e-50));
}

TEST_CASE("v-exponent structure of Maass coefficients") {
  for (bool ell : {false, true}) {
    auto f = ell ? elliptic_maass_fourier(3, 2, ResiduePair(3, 1, 2), 30, P) : maass_fourier(3, 2, ResiduePair(3, 1, 2), 30, P);
    for (const auto& a : f.A)
      for (const auto& [e, c] : a) CHECK((e >= 2 && e <= 4));
    for (const auto& c : f.C)
      for (const auto& [e, x] : c) CHECK((e >= 3 && e <= 4));
  }
}

TEST_CASE("Ewald and direct lattice sums agree loosely") {
  BigComplex tau = tau_of(Rat(1, 5), Rat(6, 5));
  for (auto kind : {LatticeKind::Elliptic, LatticeKind::Congruence}) {
    LatticeParams lp;
    lp.k = 4;
    lp.l = 2;
    lp.lambda = ResiduePair(3, 1, 2);
    lp.kind = kind;
    lp.R = 60;
    BigComplex a = lattice_sum(lp, tau, 96, LatticeMethod::Direct);
    BigComplex b = lattice_sum(lp, tau, P);
    CHECK(abs(a - b) < eps(1e-5));
  }
}

TEST_CASE("Fourier expansions match the lattice sums") {
  std::vector<BigComplex> taus = {tau_of(0, 1), tau_of(Rat(1, 2), Rat(3, 2)), tau_of(Rat(1, 5), 2)};
  struct Case {
    int k, l, N, l1, l2;
  };
  std::vector<Case> cases = {{4, 0, 1, 0, 0}, {3, 0, 3, 1, 1}, {2, 1, 2, 0, 1}, {3, 1, 1, 0, 0},
                             {2, 2, 2, 0, 1}, {1, 3, 4, 1, 3}, {3, 2, 3, 2, 0}, {0, 4, 2, 1, 1}};
  for (const auto& c : cases) {
    ResiduePair lam(c.N, c.l1, c.l2);
    for (const auto& tau : taus) {
      for (auto kind : {LatticeKind::Elliptic, LatticeKind::Congruence}) {
        LatticeParams lp{c.k, c.l, lam, kind, 400};
        BigComplex want = lattice_sum(lp, tau, P);
        BigComplex got = maass_value(kind == LatticeKind::Elliptic, c.k, c.l, lam, tau, 200);
        INFO("k=", c.k, " l=", c.l, " ", to_string(lam), " elliptic=", kind == LatticeKind::Elliptic);
        CHECK(abs(want - got) < eps(1e-18));
      }
    }
  }
}

TEST_CASE("holomorphic series match lattice sums") {
  BigComplex tau = tau_of(Rat(1, 5), 2);
  for (int N = 1; N <= 4; ++N) {
    for (int k = 3; k <= 6; ++k) {
      for (const auto& lam : index_set(N, k)) {
        LatticeParams lp{k, 0, lam, LatticeKind::Elliptic, 400};
        BigComplex want = lattice_sum(lp, tau, P);
        BigComplex got = raw_scale(k, P) * eval_fourier(e_fourier(k, lam, 150), tau, P);
        CHECK(abs(want - got) < eps(1e-18));
        LatticeParams lg{k, 0, lam, LatticeKind::Congruence, 400};
        CHECK(abs(lattice_sum(lg, tau, P) - eval_fourier(g_fourier(k, lam, 150, P), tau, P)) < eps(1e-18));
      }
    }
  }
}

TEST_CASE("elliptic series is the character transform of the congruence series") {
  const int N = 3, k = 4;
  for (const auto& lam : index_set(N, k)) {
    NumericHolo e = to_numeric(e_fourier(k, lam, 20), P);
    BigComplex a0(P);
    std::vector<BigComplex> a(20, BigComplex(P));
    for (const auto& th : all_residues(N)) {
      BigComplex b = e_rat(make_rat(th.l1 * lam.l2 - th.l2 * lam.l1, N), P);
      NumericHolo g = g_fourier(k, th, 20, P);
      a0 += b * g.A0;
      for (int j = 0; j < 20; ++j) a[j] += b * g.A[j];
    }
    CHECK(abs(a0 - e.A0) < eps(1e-40));
    for (int j = 0; j < 20; ++j) CHECK(abs(a[j] - e.A[j]) < eps(1e-30));
  }
}

TEST_CASE("modular covariance and principal-level invariance") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  BigComplex tau = tau_of(Rat(1, 7), Rat(9, 8));
  for (int trial = 0; trial < 6; ++trial) {
    Mat2 g = Mat2::identity();
    for (int s = 0; s < 3; ++s) g = g * Mat2::T(pick(rng)) * Mat2::S();
    BigComplex gt = apply(g, tau);
    if (gt.im < Real(0.6, P)) continue;
    ResiduePair lam(3, 1, 2);
    for (bool ell : {false, true}) {
      BigComplex lhs = maass_value(ell, 3, 1, lam, gt) / automorphy(g, tau, 3, 1);
      BigComplex rhs = maass_value(ell, 3, 1, act_residue(lam, g), tau);
      CHECK(abs(lhs - rhs) < eps(1e-20));
    }
  }
  Mat2 g{1, 3, 3, 10};  // in Gamma(3)
  BigComplex t2 = tau_of(Rat(-1, 10), Rat(3, 10));
  BigComplex gt = apply(g, t2);
  LatticeParams lp{2, 2, ResiduePair(3, 1, 1), LatticeKind::Congruence, 400};
  CHECK(abs(lattice_sum(lp, gt, P) / automorphy(g, t2, 2, 2) - lattice_sum(lp, t2, P)) < eps(1e-30));
}

TEST_CASE("truncation consistency") {
  BigComplex tau = tau_of(Rat(1, 3), 1);
  ResiduePair lam(4, 1, 3);
  BigComplex a = maass_value(false, 3, 2, lam, tau, 60);
  BigComplex b = maass_value(false, 3, 2, lam, tau, 120);
  // tail below |q_4|^60 times polynomial growth
  CHECK(abs(a - b) < eps(1e-35));
}

TEST_CASE("conjugation symmetry and odd-weight vanishing") {
  BigComplex tau = tau_of(Rat(2, 9), Rat(5, 4));
  ResiduePair lam(4, 1, 2);
  ResiduePair neg(4, -1, -2);
  BigComplex x = maass_value(true, 4, 1, lam, tau);
  BigComplex y = maass_value(true, 1, 4, neg, tau);
  CHECK(abs(conj(x) - y) < eps(1e-30));
  BigComplex u = maass_value(false, 2, 3, lam, tau);
  BigComplex v = maass_value(false, 3, 2, lam, tau);
  CHECK(abs(conj(u) - v) < eps(1e-30));
  // lambda = -lambda mod 2 and odd total weight: the sum cancels in pairs
  LatticeParams lp{2, 1, ResiduePair(2, 1, 1), LatticeKind::Elliptic, 400};
  CHECK(abs(lattice_sum(lp, tau, P)) < eps(1e-40));
  CHECK(abs(maass_value(true, 2, 1, ResiduePair(2, 1, 1), tau)) < eps(1e-40));
}

TEST_CASE("exact series: covariance under S, T, ST and invariance under T^N") {
  std::mt19937_64 rng(3);
  BigComplex tau = tau_of(Rat(1, 9), Rat(13, 10));
  std::vector<Mat2> gens = {Mat2::S(), Mat2::T(1), Mat2::S() * Mat2::T(1)};
  for (int t = 0; t < 12;) {
    int N = 1 + static_cast<int>(rng() % 4);
    int k = 3 + static_cast<int>(rng() % 4);
    auto idx = index_set(N, k);
    if (idx.empty()) continue;
    ++t;
    ResiduePair lam = idx[rng() % idx.size()];
    for (const Mat2& g : gens) {
      BigComplex gt = apply(g, tau);
      BigComplex lhs = eval_fourier(e_fourier(k, act_residue(lam, g), 200), tau, P);
      BigComplex rhs = eval_fourier(e_fourier(k, lam, 200), gt, P) / automorphy(g, tau, k, 0);
      CHECK(abs(lhs - rhs) < eps(1e-25));
    }
    Mat2 tn = Mat2::T(N);
    HoloFourier f = e_fourier(k, lam, 150);
    CHECK(abs(eval_fourier(f, apply(tn, tau), P) - eval_fourier(f, tau, P)) < eps(1e-40));
  }
}

TEST_CASE("exact series truncation 100 vs 200") {
  BigComplex tau = tau_of(Rat(1, 4), Rat(1, 2));
  for (int N = 1; N <= 4; ++N) {
    for (const auto& lam : index_set(N, 4)) {
      BigComplex a = eval_fourier(e_fourier(4, lam, 100), tau, P);
      BigComplex b = eval_fourier(e_fourier(4, lam, 200), tau, P);
      CHECK(abs(a - b) < ldexp(Real(1L, P), -64));
    }
  }
}
