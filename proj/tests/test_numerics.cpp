#include <random>

#include "doctest.h"
#include "eisp/bernoulli.hpp"
#include "eisp/errors.hpp"
#include "eisp/specfun.hpp"

using namespace eisp;

namespace {

constexpr prec_t P = 192;

Real tol_bits(long e) { return ldexp(Real(1L, P), e); }

bool close(const BigComplex& a, const BigComplex& b, const Real& eps) { return abs(a - b) < eps; }

BigComplex cr(const Rat& q, prec_t p = P) { return BigComplex(Real(q, p)); }
BigComplex cl(long n, prec_t p = P) { return BigComplex(Real(n, p)); }

// Borwein's algorithm for the alternating zeta eta(s), Re s > 0.
BigComplex eta_borwein(const BigComplex& s, int n) {
  prec_t wp = P + 64;
  std::vector<Real> d(n + 1, Real(wp));
  Real acc(0L, wp);
  for (int i = 0; i <= n; ++i) {
    // d_i = n sum_{j<=i} (n+j-1)! 4^j / ((n-j)! (2j)!)
    Rat t(factorial(n + i - 1) * (Int(1) << (2 * i)), factorial(n - i) * factorial(2 * i));
    if (i == 0) t = Rat(1, n);
    acc += Real(t, wp) * n;
    d[i] = acc;
  }
  BigComplex sum(wp);
  BigComplex sw = s.with_prec(wp);
  for (int k = 0; k < n; ++k) {
    Real L = log(Real(k + 1L, wp));
    BigComplex term = exp(BigComplex(-sw.re * L, -sw.im * L)) * (d[k] - d[n]);
    if (k % 2) sum -= term; else sum += term;
  }
  return sum / (-d[n]);
}

}  // namespace

TEST_CASE("hurwitz_zeta examples") {
  Real pi = const_pi(P);
  CHECK(close(hurwitz_zeta(Rat(1), cl(2), P), BigComplex(pi * pi / 6L), tol_bits(-180)));
  CHECK(close(hurwitz_zeta(make_rat(1, 2), cl(2), P), BigComplex(pi * pi / 2L), tol_bits(-180)));
  BigComplex z0 = hurwitz_zeta(make_rat(1, 3), cl(0), P);
  auto r = rational_reconstruct(z0, Int(1000), tol_bits(-150));
  REQUIRE(r);
  CHECK(*r == make_rat(1, 6));
  CHECK_THROWS_AS(hurwitz_zeta(Rat(1), cl(1), P), PoleError);
}

TEST_CASE("hurwitz_zeta matches mpfr zeta and multiplication formulas") {
  for (long s = 2; s <= 9; ++s) {
    Real z = real_zeta(Real(s, P));
    CHECK(close(hurwitz_zeta(Rat(1), cl(s), P), BigComplex(z), tol_bits(-180)));
    // zeta(1/3,s) + zeta(2/3,s) = (3^s - 1) zeta(s)
    BigComplex thirds = hurwitz_zeta(make_rat(1, 3), cl(s), P) + hurwitz_zeta(make_rat(2, 3), cl(s), P);
    CHECK(close(thirds, BigComplex(z * (pow(Real(3L, P), s) - Real(1L, P))), tol_bits(-170)));
    // zeta(1/4,s) + zeta(3/4,s) = (4^s - 2^s) zeta(s)
    BigComplex q = hurwitz_zeta(make_rat(1, 4), cl(s), P) + hurwitz_zeta(make_rat(3, 4), cl(s), P);
    CHECK(close(q, BigComplex(z * (pow(Real(4L, P), s) - pow(Real(2L, P), s))), tol_bits(-165)));
  }
  // negative real and fractional s through mpfr's continued zeta
  for (double sd : {-3.5, -0.25, 0.5, 1.5, 2.75}) {
    Real s(sd, P);
    Real z = real_zeta(s);
    CHECK(close(hurwitz_zeta(Rat(1), BigComplex(s), P), BigComplex(z), tol_bits(-170)));
  }
}

TEST_CASE("hurwitz_zeta complex s against the Borwein eta oracle") {
  for (auto [sr, si] : {std::pair{2.0, 3.0}, {0.5, 14.0}, {1.7, -0.4}, {3.0, 1.0}}) {
    BigComplex s(Real(sr, P), Real(si, P));
    BigComplex zeta = hurwitz_zeta(Rat(1), s, P);
    BigComplex one = cl(1);
    BigComplex two_1ms = pow(Real(2L, P), one - s);
    BigComplex eta = eta_borwein(s, 160);
    CHECK(close(zeta * (one - two_1ms), eta, tol_bits(-150)));
  }
}

TEST_CASE("hurwitz_zeta at nonpositive integers gives Bernoulli values") {
  for (Rat a : {make_rat(1, 2), make_rat(1, 3), make_rat(1, 4), Rat(1)}) {
    for (int n = 0; n <= 8; ++n) {
      BigComplex z = hurwitz_zeta(a, cl(-n), P);
      INFO("a=", to_string(a), " n=", n, " z=", z.re.hex());
      auto r = rational_reconstruct(z, Int(100000000), tol_bits(-150));
      REQUIRE(r);
      CHECK(*r == -bernoulli_value(n + 1, a) / (n + 1));
    }
  }
}

TEST_CASE("hurwitz error bound and precision monotonicity") {
  for (Rat a : {make_rat(1, 5), make_rat(2, 3), Rat(1)}) {
    for (double sd : {-6.0, -1.5, 0.3, 2.0, 7.25}) {
      BigComplex s(Real(sd, P + 64), Real(0.5, P + 64));
      Evaluated lo = hurwitz_zeta_ex(a, s.with_prec(P), P);
      BigComplex hi = hurwitz_zeta(a, s, P + 64);
      Real scale = max(abs(hi), Real(1L, P));
      CHECK(abs(lo.value - hi) < ldexp(scale, 8 - static_cast<long>(P)));
      CHECK(lo.error_bound < ldexp(scale, 8 - static_cast<long>(P)));
    }
  }
}

TEST_CASE("digamma regular part") {
  // -psi(1) = Euler's constant; -psi(1/2) = gamma + 2 log 2
  CHECK(abs(hurwitz_regular_part(Rat(1), P) - const_euler(P)) < tol_bits(-180));
  Real expect = const_euler(P) + const_log2(P) * 2L;
  CHECK(abs(hurwitz_regular_part(make_rat(1, 2), P) - expect) < tol_bits(-180));
}

TEST_CASE("polylog examples") {
  Real pi = const_pi(P);
  CHECK(close(polylog(2, make_rat(1, 2), P), BigComplex(-pi * pi / 12L), tol_bits(-175)));
  CHECK(close(polylog(3, Rat(0), P), BigComplex(real_zeta(Real(3L, P))), tol_bits(-180)));
  // 1 - e(1/3) has modulus sqrt 3 and argument -pi/6
  BigComplex li1 = polylog(1, make_rat(1, 3), P);
  BigComplex expect(-log(Real(3L, P)) / 2L, pi / 6L);
  CHECK(close(li1, expect, tol_bits(-180)));
  CHECK_THROWS_AS(polylog(1, Rat(0), P), DivergenceError);
}

TEST_CASE("polylog against direct summation") {
  prec_t p = 128;
  for (Rat x : {make_rat(1, 5), make_rat(2, 7), make_rat(1, 2)}) {
    for (int w = 5; w <= 6; ++w) {
      BigComplex direct(p);
      for (long n = 1; n <= 20000; ++n)
        direct += e_rat(x * n, p) / pow(Real(n, p), static_cast<long>(w));
      CHECK(abs(polylog(w, x, p) - direct) < Real(1e-19, p));
    }
  }
}

TEST_CASE("polylog reflection relation") {
  for (int w = 2; w <= 6; ++w) {
    for (Rat x : {make_rat(1, 5), make_rat(1, 3), make_rat(1, 2)}) {
      BigComplex lhs = polylog(w, x, P) + polylog(w, -x, P) * ((w % 2) ? -1L : 1L);
      BigComplex twopii(Real(P), ldexp(const_pi(P), 1));
      lhs += pow(twopii, static_cast<long>(w)) * Real(bernoulli_value(w, x) / Rat(factorial(w)), P);
      CHECK(abs(lhs) < Real(1e-30, P));
    }
  }
}

TEST_CASE("lerch_phi") {
  BigComplex s(Real(2.5, P), Real(0.75, P));
  CHECK(close(lerch_phi(Rat(0), make_rat(1, 3), s, P), hurwitz_zeta(make_rat(1, 3), s, P), tol_bits(-180)));
  for (Rat x : {make_rat(1, 4), make_rat(2, 5)}) {
    BigComplex li = polylog_s(x, s, P);
    CHECK(close(lerch_phi(x, Rat(1), s, P), e_rat(-x, P) * li, tol_bits(-175)));
  }
  Real cat(P);
  mpfr_const_catalan(cat.get(), MPFR_RNDN);
  CHECK(close(lerch_phi(make_rat(1, 2), make_rat(1, 2), cl(2), P), BigComplex(cat * 4L), tol_bits(-175)));
  // conditionally convergent s = 1 values
  CHECK(close(lerch_phi(make_rat(1, 2), Rat(1), cl(1), P), BigComplex(const_log2(P)), tol_bits(-175)));
  CHECK(close(lerch_phi(make_rat(1, 2), make_rat(1, 2), cl(1), P), BigComplex(const_pi(P) / 2L), tol_bits(-175)));
  CHECK_THROWS_AS(lerch_phi(Rat(3), make_rat(1, 2), cl(1), P), PoleError);
}

TEST_CASE("complex gamma") {
  Real pi = const_pi(P);
  for (double t : {0.3, 1.0, 4.5}) {
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    BigComplex g = gamma(BigComplex(Real(0.5, P), Real(t, P)), P);
    Real pt = pi * Real(t, P);
    Real ch = (exp(pt) + exp(-pt)) / 2L;
    CHECK(abs(norm(g) - pi / ch) < tol_bits(-170));
    // |Gamma(it)|^2 = pi / (t sinh(pi t))
    BigComplex g2 = gamma(BigComplex(Real(0L, P), Real(t, P)), P);
    Real sh = (exp(pt) - exp(-pt)) / 2L;
    CHECK(abs(norm(g2) - pi / (Real(t, P) * sh)) < ldexp(pi / (Real(t, P) * sh), -170));
  }
  BigComplex z(Real(-2.3, P), Real(0.7, P));
  BigComplex lhs = gamma(z + cl(1), P);
  CHECK(abs(lhs - z * gamma(z, P)) < ldexp(abs(lhs), -170));
  CHECK_THROWS_AS(gamma(cl(-3), P), PoleError);
}

TEST_CASE("incomplete gamma against mpfr_gamma_inc") {
  prec_t p = 160;
  for (long a : {-6L, -3L, -1L, 0L, 1L, 2L, 5L}) {
    for (double x : {0.2, 1.5, 7.0, 25.0, 48.0}) {
      Real xr(x, p);
      Real ref(p + 64);
      mpfr_gamma_inc(ref.get(), Real(a, p + 64).get(), xr.with_prec(p + 64).get(), MPFR_RNDN);
      Real got = upper_gamma_int(a, xr, p);
      CHECK(abs(got - ref) < ldexp(abs(ref), 6 - static_cast<long>(p)));
    }
  }
  for (double s : {-2.5, 0.5, 3.25}) {
    for (double x : {0.7, 12.0, 60.0}) {
      Real ref(p + 64);
      mpfr_gamma_inc(ref.get(), Real(s, p + 64).get(), Real(x, p + 64).get(), MPFR_RNDN);
      BigComplex got = upper_gamma(BigComplex(Real(s, p)), Real(x, p), p);
      CHECK(abs(got.re - ref) < ldexp(abs(ref), 8 - static_cast<long>(p)));
      CHECK(abs(got.im) < ldexp(abs(ref), 8 - static_cast<long>(p)));
    }
  }
}

TEST_CASE("complex incomplete gamma recurrence across methods") {
  BigComplex s(Real(1.3, P), Real(0.8, P));
  for (double x : {3.0, 40.0}) {
    Real xr(x, P);
    BigComplex lhs = upper_gamma(s + cl(1), xr, P);
    BigComplex rhs = s * upper_gamma(s, xr, P) + exp(s * log(xr) - BigComplex(xr));
    CHECK(abs(lhs - rhs) < ldexp(abs(lhs), -170));
  }
}

TEST_CASE("rational_reconstruct examples") {
  prec_t p = 128;
  auto r1 = rational_reconstruct(BigComplex(Real(0.33333333333, p)), Int(100), Real(1e-9, p));
  REQUIRE(r1);
  CHECK(*r1 == make_rat(1, 3));
  Real v = Real(make_rat(-1, 54), p) + Real(3e-12, p);
  auto r2 = rational_reconstruct(BigComplex(v), Int(1000), Real(1e-9, p));
  REQUIRE(r2);
  CHECK(*r2 == make_rat(-1, 54));
  auto r3 = rational_reconstruct(BigComplex(sqrt(Real(2L, p)) / 2L), Int(100), Real(1e-9, p));
  CHECK(!r3);
  auto r4 = rational_reconstruct(BigComplex(Real(0.5, p), Real(1e-3, p)), Int(100), Real(1e-9, p));
  CHECK(!r4);
  auto r5 = rational_reconstruct(BigComplex(Real(0L, p)), Int(10), Real(1e-9, p));
  REQUIRE(r5);
  CHECK(*r5 == 0);
}

TEST_CASE("rational_reconstruct recovers random fractions") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 999999);
  for (int t = 0; t < 200; ++t) {
    Rat q = make_rat(num(rng), den(rng));
    BigComplex z(Real(q, 256) + Real(1e-45, 256));
    auto r = rational_reconstruct(z, Int(1000000), Real(1e-30, 256));
    REQUIRE(r);
    CHECK(*r == q);
  }
}

TEST_CASE("numeric values of exact objects") {
  for (int N = 1; N <= 12; ++N)
    for (int j = 0; j < N; ++j)
      CHECK(close(cyclo_value(Cyclo::root(N, j), P), e_rat(make_rat(j, N), P), tol_bits(-180)));
  // symbol_reduce preserves numeric value
  std::mt19937_64 rng(23);
  for (int w = 1; w <= 6; ++w) {
    for (int trial = 0; trial < 6; ++trial) {
      std::uniform_int_distribution<long> Nd(2, 10);
      long N = Nd(rng);
      std::uniform_int_distribution<long> ad(w == 1 ? 1 : 0, N - 1), cd(-4, 4);
      std::map<Rat, Rat> raw;
      for (int t = 0; t < 3; ++t) raw[make_rat(ad(rng), N)] += Rat(cd(rng));
      BigComplex direct(P);
      for (const auto& [x, c] : raw) direct += pl_value(PolylogSymbol{w, x}, P) * Real(c, P);
      BigComplex reduced = ext_value(symbol_reduce(w, raw), P);
      CHECK(abs(direct - reduced) < tol_bits(16 - static_cast<long>(P)));
    }
  }
}
