#include <random>

#include "doctest.h"
#include "eisp/cocycle.hpp"
#include "eisp/errors.hpp"
#include "eisp/lseries.hpp"
#include "eisp/specfun.hpp"

using namespace eisp;

namespace {

constexpr prec_t P = 192;

Real eps(double d) { return Real(d, P); }

Mat2 random_sl2(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> pick(-4, 4);
  Mat2 g = Mat2::identity();
  for (int i = 0; i < steps; ++i) g = g * Mat2::T(pick(rng)) * Mat2::S();
  return g;
}

PeriodPoly random_poly(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  PeriodPoly p(k);
  for (int i = 0; i <= k - 2; ++i) {
    p[i] = make_rat(num(rng), den(rng));
    if (rng() % 3 == 0) p[i].add_symbol(k - 1, Rat(1, 3), Rat(num(rng), 1));
  }
  return p;
}

}  // namespace

TEST_CASE("period at T examples") {
  CHECK(period_T(4, ResiduePair(1, 0, 0)) == rational_poly(4, {make_rat(1, 2160), make_rat(3, 2160), make_rat(3, 2160)}));
  CHECK(period_T(2, ResiduePair(2, 1, 0)) == rational_poly(2, {Rat(1, 24)}));
  CHECK(period_T(5, ResiduePair(3, 0, 1)).is_zero());
  CHECK_THROWS_AS(period_T(3, ResiduePair(2, 1, 0)), IndexSetError);
}

TEST_CASE("period at S examples") {
  PeriodPoly p = period_S(4, ResiduePair(1, 0, 0));
  ExtScalar sym;
  sym.add_symbol(3, Rat(0), Rat(1, 3));
  CHECK(p[2] == sym);
  CHECK(p[1] == ExtScalar(Rat(-1, 432)));
  CHECK(p[0] == -sym);

  PeriodPoly q = period_S(2, ResiduePair(2, 0, 1));
  CHECK(q[0].rational_part() == 0);
  REQUIRE(q[0].symbol_terms().size() == 1);
  CHECK(q[0].symbol_terms().begin()->first == PolylogSymbol{1, Rat(1, 2)});
  CHECK(q[0].symbol_terms().begin()->second == -1);
}

TEST_CASE("period at S against numeric L-values") {
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 10) {
    int N = 1 + static_cast<int>(rng() % 4);
    int k = 2 + static_cast<int>(rng() % 6);
    auto idx = index_set(N, k);
    if (idx.empty()) continue;
    ResiduePair lam = idx[rng() % idx.size()];
    if (done == 0) {
      k = 3;
      lam = ResiduePair(3, 1, 1);
    }
    ++done;
    auto num = period_S(k, lam).numeric(P);
    LFunctionSpec spec = lspec_eisenstein(k, lam, 0, P);
    for (int r = 0; r <= k - 2; ++r) {
      BigComplex L = lvalue_numeric(spec, BigComplex(Real(static_cast<long>(r + 1), P)), P);
      BigComplex want = i_pow(1 - r, P) * L * Real(binomial(k - 2, r), P);
      CHECK(abs(num[k - 2 - r] - want) < eps(1e-18));
    }
  }
}

TEST_CASE("action is a right action") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    int k = 2 + static_cast<int>(rng() % 7);
    PeriodPoly p = random_poly(rng, k);
    Mat2 g1 = random_sl2(rng, 2), g2 = random_sl2(rng, 2);
    CHECK(p.act(g1 * g2) == p.act(g1).act(g2));
    CHECK(p.act(Mat2::identity()) == p);
  }
}

TEST_CASE("induced cochain structure") {
  InducedCochain c1 = build_induced(4, ResiduePair(1, 0, 0));
  REQUIRE(c1.at_T.size() == 1);
  CHECK(c1.at_T[0] == period_T(4, ResiduePair(1, 0, 0)));
  CHECK(c1.at_S[0] == period_S(4, ResiduePair(1, 0, 0)));

  InducedCochain c2 = build_induced(2, ResiduePair(2, 0, 1));
  CHECK(c2.at_T.size() == 6);
  const CosetTable& t = *c2.cosets;
  for (int i = 0; i < t.size(); ++i) {
    ResiduePair ls = act_residue(ResiduePair(2, 0, 1), t.lift(i));
    CHECK(c2.at_S[i] == period_S(2, ls));
  }
}

TEST_CASE("cocycle evaluation rules") {
  InducedCochain c = build_induced(3, ResiduePair(3, 1, 1));
  const CosetTable& t = *c.cosets;
  for (const auto& p : evaluate_cocycle(c, Mat2::identity())) CHECK(p.is_zero());
  auto t2 = evaluate_cocycle(c, Mat2::T(2));
  auto want = act(t, c.at_T, Mat2::T());
  for (size_t i = 0; i < want.size(); ++i) want[i] += c.at_T[i];
  CHECK(t2 == want);
  auto tm = evaluate_cocycle(c, Mat2::T(-3));
  auto t3 = evaluate_cocycle(c, Mat2::T(3));
  auto back = act(t, t3, Mat2::T(-3));
  for (size_t i = 0; i < back.size(); ++i) CHECK(tm[i] == -back[i]);
  // cocycle rule on random products
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    Mat2 g1 = random_sl2(rng, 2), g2 = random_sl2(rng, 2);
    auto lhs = evaluate_cocycle(c, g1 * g2);
    auto rhs = act(t, evaluate_cocycle(c, g1), g2);
    auto c2 = evaluate_cocycle(c, g2);
    for (size_t i = 0; i < rhs.size(); ++i) CHECK(lhs[i] == rhs[i] + c2[i]);
  }
}

TEST_CASE("relations hold and detect corruption") {
  CHECK(verify_relations(build_induced(4, ResiduePair(1, 0, 0))));
  InducedCochain c = build_induced(3, ResiduePair(3, 1, 1));
  CHECK(verify_relations(c));
  c.at_S[2][0] += ExtScalar(Rat(1, 1000));
  CHECK_FALSE(verify_relations(c));
}

TEST_CASE("coboundary and certification") {
  CoboundaryData F = coboundary(4, ResiduePair(1, 0, 0));
  REQUIRE(F.values.size() == 1);
  CHECK_FALSE(F.values[0].is_rational());
  CHECK(F.values[0].symbol_terms().count(PolylogSymbol{3, Rat(0)}) == 1);
  auto [m, rep] = modify_and_certify(build_induced(4, ResiduePair(1, 0, 0)), F);
  CHECK(rep.rational);
  CHECK(m.at_S[0].is_rational());
  CHECK(m.at_T[0] == period_T(4, ResiduePair(1, 0, 0)));

  CoboundaryData F2 = coboundary(2, ResiduePair(2, 0, 1));
  auto t = coset_table(2);
  for (int i = 0; i < t->size(); ++i)
    if (act_residue(ResiduePair(2, 0, 1), t->lift(i)).l1 != 0) CHECK(F2.values[i].is_zero());

  RationalityReport raw = certify(build_induced(4, ResiduePair(1, 0, 0)));
  CHECK_FALSE(raw.rational);
  CHECK(raw.failures.size() == 2);
}

TEST_CASE("rationality and relations on a small sweep") {
  for (int N = 1; N <= 4; ++N) {
    for (int k = 2; k <= 6; ++k) {
      for (const auto& lam : index_set(N, k)) {
        InducedCochain c = build_induced(k, lam);
        auto [m, rep] = modify_and_certify(c, coboundary(k, lam));
        INFO("k=", k, " ", to_string(lam));
        CHECK(rep.rational);
        CHECK(verify_relations(c));
        CHECK(verify_relations(m));
      }
    }
  }
}

TEST_CASE("Shapiro descent at parabolic elements") {
  InducedCochain c = build_induced(4, ResiduePair(2, 0, 1));
  PeriodPoly v = shapiro_descend(c, Mat2::T(2));
  CHECK(v == rational_poly(4, {make_rat(4, 1080), make_rat(6, 1080), make_rat(3, 1080)}));
  CHECK(shapiro_descend(c, Mat2::identity()).is_zero());
  CHECK(shapiro_descend(c, Mat2::T(4)) == parabolic_closed_form(4, ResiduePair(2, 0, 1), 4));
  CHECK_THROWS_AS(shapiro_descend(c, Mat2::T(1)), PreconditionError);
  for (int N = 1; N <= 4; ++N)
    for (int k = 2; k <= 6; ++k)
      for (const auto& lam : index_set(N, k))
        CHECK(shapiro_descend(build_induced(k, lam), Mat2::T(N)) == parabolic_closed_form(k, lam, N));
}
