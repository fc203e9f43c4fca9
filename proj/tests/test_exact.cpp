#include <random>

#include "doctest.h"
#include "eisp/bernoulli.hpp"
#include "eisp/cyclo.hpp"
#include "eisp/errors.hpp"
#include "eisp/ext_scalar.hpp"

using namespace eisp;

namespace {

// Bernoulli numbers from the series inverse of (e^x - 1)/x = sum x^n/(n+1)!.
std::vector<Rat> bernoulli_by_series_inverse(int n) {
  std::vector<Rat> f(n + 1), g(n + 1);
  for (int i = 0; i <= n; ++i) f[i] = Rat(1, factorial(i + 1));
  g[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Rat s = 0;
    for (int j = 1; j <= i; ++j) s += f[j] * g[i - j];
    g[i] = -s;
  }
  for (int i = 0; i <= n; ++i) g[i] *= Rat(factorial(i));
  return g;
}

Rat random_rat(std::mt19937_64& rng, long num_range, long den_max) {
  std::uniform_int_distribution<long> nd(-num_range, num_range), dd(1, den_max);
  return make_rat(nd(rng), dd(rng));
}

Cyclo random_cyclo(std::mt19937_64& rng, int N) {
  std::vector<Rat> v(N);
  for (auto& x : v) x = random_rat(rng, 9, 5);
  return cyclo_canonical(N, v);
}

}  // namespace

TEST_CASE("bernoulli_polynomial small degrees") {
  BernoulliPoly b0 = bernoulli_polynomial(0);
  REQUIRE(b0.coeffs.size() == 1);
  CHECK(b0.coeffs[0] == 1);
  BernoulliPoly b1 = bernoulli_polynomial(1);
  CHECK(b1.coeffs[0] == Rat(-1, 2));
  CHECK(b1.coeffs[1] == 1);
  BernoulliPoly b2 = bernoulli_polynomial(2);
  CHECK(b2.coeffs[0] == Rat(1, 6));
  CHECK(b2.coeffs[1] == -1);
  CHECK(b2.coeffs[2] == 1);
}

TEST_CASE("bernoulli numbers agree with the generating-function inverse") {
  auto ref = bernoulli_by_series_inverse(30);
  for (int n = 0; n <= 30; ++n) CHECK(bernoulli_number(n) == ref[n]);
}

TEST_CASE("bernoulli polynomial structure") {
  for (int n = 0; n <= 16; ++n) {
    BernoulliPoly b = bernoulli_polynomial(n);
    CHECK(b.coeffs[n] == 1);
    if (n >= 3 && n % 2 == 1) CHECK(b(Rat(0)) == 0);
    // B_n(x + 1) - B_n(x) = n x^{n-1}
    for (long t = -3; t <= 3; ++t) {
      Rat x = make_rat(t, 7);
      Rat lhs = b(x + 1) - b(x);
      Rat rhs = 0;
      if (n >= 1) {
        Rat p = 1;
        for (int i = 0; i < n - 1; ++i) p *= x;
        rhs = Rat(n) * p;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bernoulli reflection B_n(1-t) = (-1)^n B_n(t)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> den(1, 40);
  for (int n = 0; n <= 12; ++n) {
    BernoulliPoly b = bernoulli_polynomial(n);
    for (int trial = 0; trial < 20; ++trial) {
      long q = den(rng);
      std::uniform_int_distribution<long> num(0, q);
      Rat t = make_rat(num(rng), q);
      Rat sign = (n % 2) ? Rat(-1) : Rat(1);
      CHECK(b(1 - t) == sign * b(t));
    }
  }
}

TEST_CASE("formal_binomial") {
  CHECK(formal_binomial(17, 0) == 1);
  CHECK(formal_binomial(-5, 0) == 1);
  CHECK(formal_binomial(3, 5) == 0);
  CHECK(formal_binomial(-2, 1) == -2);
  CHECK(formal_binomial(4, -1) == 0);
  CHECK(formal_binomial(-1, 3) == -1);
  CHECK(formal_binomial(-3, 2) == 6);
  for (long t = -8; t <= 8; ++t)
    for (long n = 1; n <= 8; ++n)
      CHECK(formal_binomial(t, n) == formal_binomial(t - 1, n) + formal_binomial(t - 1, n - 1));
  for (long t = 0; t <= 10; ++t)
    for (long n = 0; n <= t; ++n) CHECK(formal_binomial(t, n) == Rat(binomial(t, n)));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_poly(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int N = 1; N <= 12; ++N) CHECK(static_cast<int>(cyclotomic_poly(N).size()) - 1 == euler_phi(N));
}

TEST_CASE("cyclo_canonical examples") {
  Cyclo a = cyclo_canonical(4, {0, 0, 1, 0});
  CHECK(a == Cyclo::from_rat(4, Rat(-1)));
  CHECK(cyclo_canonical(3, {1, 1, 1}).is_zero());
  Cyclo q = cyclo_canonical(1, {make_rat(7, 3)});
  CHECK(q.is_rational());
  CHECK(q.rational_value() == make_rat(7, 3));
}

TEST_CASE("cyclo roots of unity") {
  for (int N = 1; N <= 12; ++N) {
    CHECK(Cyclo::root(N, N) == Cyclo::from_rat(N, 1));
    Cyclo sum(N);
    for (int j = 0; j < N; ++j) sum += Cyclo::root(N, j);
    if (N > 1) CHECK(sum.is_zero());
    Cyclo mu = Cyclo::root(N, 1);
    Cyclo p = Cyclo::from_rat(N, 1);
    for (int j = 0; j < N; ++j) p *= mu;
    CHECK(p == Cyclo::from_rat(N, 1));
    CHECK(Cyclo::root(N, 1).conj() == Cyclo::root(N, -1));
  }
  // mu_2 = -1 seen inside Q(mu_6)
  CHECK(Cyclo::root(2, 1).lift(6) == Cyclo::root(6, 3));
  CHECK(Cyclo::root(3, 1) == Cyclo::root(6, 2));
}

TEST_CASE("cyclo field axioms on random triples") {
  std::mt19937_64 rng(5);
  for (int N = 1; N <= 12; ++N) {
    for (int trial = 0; trial < 8; ++trial) {
      Cyclo a = random_cyclo(rng, N), b = random_cyclo(rng, N), c = random_cyclo(rng, N);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo::from_rat(N, 1));
    }
  }
}

TEST_CASE("symbol_reduce examples") {
  ExtScalar r = symbol_reduce(3, {{make_rat(2, 3), Rat(1)}});
  CHECK(r.rational_part() == make_rat(-1, 162));
  REQUIRE(r.symbol_terms().size() == 1);
  CHECK(r.symbol_terms().begin()->first == PolylogSymbol{3, make_rat(1, 3)});
  CHECK(r.symbol_terms().begin()->second == 1);

  ExtScalar z = symbol_reduce(2, {{Rat(0), Rat(1)}});
  CHECK(z.rational_part() == make_rat(-1, 24));
  CHECK(z.is_rational());

  ExtScalar u = symbol_reduce(3, {{make_rat(1, 3), Rat(1)}});
  CHECK(u.rational_part() == 0);
  CHECK(u.symbol_terms().at(PolylogSymbol{3, make_rat(1, 3)}) == 1);
}

TEST_CASE("symbol_reduce edge cases") {
  CHECK_THROWS_AS(symbol_reduce(1, {{Rat(0), Rat(1)}}), DivergenceError);
  // odd weight at 1/2 is self-paired and kept
  ExtScalar h = symbol_reduce(3, {{make_rat(1, 2), Rat(2)}});
  CHECK(h.symbol_terms().at(PolylogSymbol{3, make_rat(1, 2)}) == 2);
  // even weight at 1/2: PL(2;1/2) = -B_2(1/2)/4 = 1/48
  ExtScalar e = symbol_reduce(2, {{make_rat(1, 2), Rat(1)}});
  CHECK(e.is_rational());
  CHECK(e.rational_part() == make_rat(1, 48));
  // arguments outside [0,1) are taken mod 1
  CHECK(symbol_reduce(3, {{make_rat(5, 3), Rat(1)}}) == symbol_reduce(3, {{make_rat(2, 3), Rat(1)}}));
  // cancellation removes the symbol entirely: PL(3;2/3) + PL(3;1/3)... -PL(3;1/3)
  ExtScalar c = symbol_reduce(3, {{make_rat(2, 3), Rat(1)}, {make_rat(1, 3), Rat(-1)}});
  CHECK(c.is_rational());
}

TEST_CASE("symbol_reduce is idempotent") {
  std::mt19937_64 rng(3);
  for (int w = 1; w <= 7; ++w) {
    for (int trial = 0; trial < 20; ++trial) {
      std::map<Rat, Rat> raw;
      std::uniform_int_distribution<long> Nd(2, 12);
      long N = Nd(rng);
      std::uniform_int_distribution<long> ad(w == 1 ? 1 : 0, N - 1);
      for (int t = 0; t < 4; ++t) raw[make_rat(ad(rng), N)] += random_rat(rng, 5, 4);
      ExtScalar once = symbol_reduce(w, raw);
      std::map<Rat, Rat> again;
      for (const auto& [s, c] : once.symbol_terms()) again[s.arg] += c;
      ExtScalar twice = symbol_reduce(w, again) + ExtScalar(once.rational_part());
      CHECK(twice == once);
      for (const auto& [s, c] : once.symbol_terms()) {
        CHECK(s.arg <= make_rat(1, 2));
        CHECK(c != 0);
        if (w % 2 == 0) CHECK(s.arg != 0);
      }
    }
  }
}

TEST_CASE("ExtScalar arithmetic") {
  ExtScalar a = symbol_reduce(3, {{make_rat(1, 4), Rat(2)}});
  ExtScalar b = symbol_reduce(3, {{make_rat(1, 4), Rat(-2)}}) + ExtScalar(Rat(5));
  ExtScalar s = a + b;
  CHECK(s.is_rational());
  CHECK(s.rational_part() == 5);
  CHECK((a * Rat(0)).is_zero());
  CHECK((a - a).is_zero());
}
