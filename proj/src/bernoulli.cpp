#include "eisp/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace eisp {

namespace {

std::mutex g_bern_mutex;
std::deque<Rat> g_bern;  // deque: references stay valid while growing

}  // namespace

const Rat& bernoulli_number(int n) {
  if (n < 0) throw std::domain_error("negative Bernoulli index");
  std::lock_guard<std::mutex> lk(g_bern_mutex);
  if (g_bern.empty()) g_bern.push_back(Rat(1));
  while (static_cast<int>(g_bern.size()) <= n) {
    // sum_{j=0}^{m} binom(m+1, j) B_j = 0
    int m = static_cast<int>(g_bern.size());
    Rat s = 0;
    for (int j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * g_bern[j];
    g_bern.push_back(-s / (m + 1));
  }
  return g_bern[n];
}

BernoulliPoly bernoulli_polynomial(int n) {
  BernoulliPoly p;
  p.degree = n;
  p.coeffs.resize(n + 1);
  for (int j = 0; j <= n; ++j) p.coeffs[n - j] = Rat(binomial(n, j)) * bernoulli_number(j);
  return p;
}

Rat BernoulliPoly::operator()(const Rat& t) const {
  Rat r = 0;
  for (int j = degree; j >= 0; --j) r = r * t + coeffs[j];
  return r;
}

Rat bernoulli_value(int n, const Rat& t) { return bernoulli_polynomial(n)(t); }

Rat formal_binomial(long t, long n) {
  if (n < 0) return 0;
  Int num = 1;
  for (long i = 0; i < n; ++i) num *= (t - i);
  Rat r(num, factorial(n));
  r.canonicalize();
  return r;
}

}  // namespace eisp
