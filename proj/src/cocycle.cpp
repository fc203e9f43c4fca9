#include "eisp/cocycle.hpp"

#include <map>
#include <mutex>

#include "eisp/bernoulli.hpp"
#include "eisp/errors.hpp"
#include "eisp/lseries.hpp"

namespace eisp {

namespace {

std::mutex g_table_mutex;
std::map<int, std::shared_ptr<const CosetTable>> g_tables;

void check_index(int k, const ResiduePair& lambda) {
  if (!in_index_set(k, lambda)) throw IndexSetError("parameter outside I_{N,k}: k=" + std::to_string(k) + " " + to_string(lambda));
}

// xi_r with L*(e_k(lambda)/(-2 pi i)^k, r) = i^r xi_r
ExtScalar xi(int k, const ResiduePair& lambda, int r) { return lvalue_closed(k, lambda, r).xi(); }

CosetPoly zero_cochain(int k, int n) { return CosetPoly(n, PeriodPoly(k)); }

CosetPoly add(CosetPoly a, const CosetPoly& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

CosetPoly neg(CosetPoly a) {
  for (auto& p : a) p = -p;
  return a;
}

// c(T^n) for n >= 1 by doubling: c(T^{a+b}) = c(T^a)|T^b + c(T^b).
CosetPoly c_T_power(const InducedCochain& c, long long n) {
  const CosetTable& t = *c.cosets;
  CosetPoly result = zero_cochain(c.k, t.size());
  long long have = 0;
  CosetPoly base = c.at_T;  // c(T^{2^i})
  long long step = 1;
  while (n > 0) {
    if (n & 1) {
      // c(T^{have + step}) = c(T^have)|T^step + c(T^step)
      result = add(act(t, result, Mat2::T(step)), base);
      have += step;
    }
    n >>= 1;
    if (n) {
      base = add(act(t, base, Mat2::T(step)), base);
      step *= 2;
    }
  }
  return result;
}

CosetPoly c_token(const InducedCochain& c, const WordToken& tok) {
  if (tok.is_S) return c.at_S;
  if (tok.power == 0) return zero_cochain(c.k, c.cosets->size());
  if (tok.power > 0) return c_T_power(c, tok.power);
  // c(g^{-1}) = -c(g)|g^{-1}
  return neg(act(*c.cosets, c_T_power(c, -tok.power), Mat2::T(tok.power)));
}

Mat2 token_matrix(const WordToken& tok) { return tok.is_S ? Mat2::S() : Mat2::T(tok.power); }

}  // namespace

std::shared_ptr<const CosetTable> coset_table(int N) {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  auto it = g_tables.find(N);
  if (it != g_tables.end()) return it->second;
  auto t = std::make_shared<const CosetTable>(N);
  g_tables.emplace(N, t);
  return t;
}

PeriodPoly period_T(int k, const ResiduePair& lambda) {
  check_index(k, lambda);
  Rat f = -bernoulli_value(k, make_rat(lambda.l1, lambda.N)) / Rat(factorial(k) * (k - 1));
  // (X+1)^{k-1} - X^{k-1}
  std::vector<Rat> c(k - 1);
  for (int i = 0; i <= k - 2; ++i) c[i] = f * Rat(binomial(k - 1, i));
  return rational_poly(k, c);
}

PeriodPoly period_S(int k, const ResiduePair& lambda) {
  check_index(k, lambda);
  PeriodPoly p(k);
  for (int r = 0; r <= k - 2; ++r) p[k - 2 - r] = xi(k, lambda, r + 1) * Rat(-binomial(k - 2, r));
  return p;
}

InducedCochain build_induced(int k, const ResiduePair& lambda) {
  check_index(k, lambda);
  InducedCochain c;
  c.k = k;
  c.lambda = lambda;
  c.cosets = coset_table(lambda.N);
  const CosetTable& t = *c.cosets;
  c.at_T.reserve(t.size());
  c.at_S.reserve(t.size());
  for (int i = 0; i < t.size(); ++i) {
    ResiduePair ls = act_residue(lambda, t.lift(i));
    c.at_T.push_back(period_T(k, ls));
    c.at_S.push_back(period_S(k, ls));
  }
  return c;
}

CoboundaryData coboundary(int k, const ResiduePair& lambda) {
  check_index(k, lambda);
  auto t = coset_table(lambda.N);
  CoboundaryData F;
  F.k = k;
  F.lambda = lambda;
  F.values.reserve(t->size());
  for (int i = 0; i < t->size(); ++i) {
    ResiduePair ls = act_residue(lambda, t->lift(i));
    if (k == 2 && ls.l1 != 0) {
      F.values.emplace_back();
      continue;
    }
    // i^{3-k} L*(e(ls), k-1) = -xi_{k-1}
    F.values.push_back(-xi(k, ls, k - 1));
  }
  return F;
}

CosetPoly act(const CosetTable& t, const CosetPoly& F, const Mat2& g) {
  Mat2 gi = g.inverse();
  CosetPoly out;
  out.reserve(F.size());
  for (int i = 0; i < t.size(); ++i) out.push_back(F[t.right_mul(i, gi)].act(g));
  return out;
}

RationalityReport certify(const InducedCochain& c) {
  RationalityReport rep;
  for (char gen : {'T', 'S'}) {
    const CosetPoly& v = gen == 'T' ? c.at_T : c.at_S;
    for (size_t i = 0; i < v.size(); ++i)
      for (int j = 0; j <= c.k - 2; ++j)
        if (!v[i][j].is_rational()) rep.failures.push_back({gen, static_cast<int>(i), j});
  }
  rep.rational = rep.failures.empty();
  return rep;
}

std::pair<InducedCochain, RationalityReport> modify_and_certify(const InducedCochain& c, const CoboundaryData& F) {
  if (F.k != c.k || F.lambda.N != c.lambda.N || F.values.size() != c.at_T.size())
    throw PreconditionError("coboundary data does not match the cochain");
  const CosetTable& t = *c.cosets;
  CosetPoly Fp;
  Fp.reserve(F.values.size());
  for (const auto& v : F.values) Fp.push_back(PeriodPoly(c.k, {v}));
  InducedCochain m = c;
  m.at_T = add(add(c.at_T, act(t, Fp, Mat2::T())), neg(Fp));
  m.at_S = add(add(c.at_S, act(t, Fp, Mat2::S())), neg(Fp));
  RationalityReport rep = certify(m);
  return {std::move(m), std::move(rep)};
}

CosetPoly evaluate_word(const InducedCochain& c, const CompactWord& w) {
  const CosetTable& t = *c.cosets;
  CosetPoly acc = zero_cochain(c.k, t.size());
  // c(x g) = c(x)|g + c(g)
  for (const auto& tok : w) acc = add(act(t, acc, token_matrix(tok)), c_token(c, tok));
  return acc;
}

CosetPoly evaluate_cocycle(const InducedCochain& c, const Mat2& g) {
  if (g.det() != 1) throw PreconditionError("matrix must have determinant 1");
  return evaluate_word(c, decompose_compact(g));
}

bool verify_relations(const InducedCochain& c) {
  WordToken S{true, 1}, T{false, 1};
  CosetPoly s4 = evaluate_word(c, {S, S, S, S});
  for (const auto& p : s4)
    if (!p.is_zero()) return false;
  return evaluate_word(c, {S, T, S, T, S, T}) == evaluate_word(c, {S, S});
}

PeriodPoly shapiro_descend(const InducedCochain& c, const Mat2& g) {
  const long long N = c.level();
  auto m = [N](long long x) { return ((x % N) + N) % N; };
  if (g.det() != 1 || m(g.a) != m(1) || m(g.b) != 0 || m(g.c) != 0 || m(g.d) != m(1))
    throw PreconditionError("matrix is not in Gamma(" + std::to_string(N) + ")");
  return evaluate_cocycle(c, g)[c.cosets->identity_index()];
}

PeriodPoly parabolic_closed_form(int k, const ResiduePair& lambda, long n) {
  Rat f = -bernoulli_value(k, make_rat(lambda.l1, lambda.N)) / Rat(factorial(k) * (k - 1));
  std::vector<Rat> c(k - 1);
  Int np(1);
  // (X+n)^{k-1} - X^{k-1} = sum_{i<k-1} binom(k-1, i) n^{k-1-i} X^i
  for (int i = k - 2; i >= 0; --i) {
    np *= n;
    c[i] = f * Rat(binomial(k - 1, i) * np);
  }
  return rational_poly(k, c);
}

}  // namespace eisp
