#include "eisp/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace eisp {

namespace {

std::mutex g_phi_mutex;
std::map<int, std::vector<long>> g_phi_cache;

std::vector<long> compute_cyclotomic(int N) {
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    const std::vector<long>& den = cyclotomic_poly(d);
    int dd = static_cast<int>(den.size()) - 1;
    int nd = static_cast<int>(num.size()) - 1;
    std::vector<long> q(nd - dd + 1, 0);
    for (int i = nd; i >= dd; --i) {
      long c = num[i];  // den is monic
      q[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int N) {
  if (N < 1) throw std::domain_error("cyclotomic level must be positive");
  {
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    auto it = g_phi_cache.find(N);
    if (it != g_phi_cache.end()) return it->second;
  }
  std::vector<long> p = compute_cyclotomic(N);
  std::lock_guard<std::mutex> lk(g_phi_mutex);
  return g_phi_cache.emplace(N, std::move(p)).first->second;
}

int euler_phi(int N) {
  int r = N;
  int n = N;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

Cyclo::Cyclo(int N) : N_(N), c_(euler_phi(N)) {
  if (N < 1) throw std::domain_error("cyclotomic level must be positive");
}

Cyclo cyclo_canonical(int N, const std::vector<Rat>& coeffs) {
  const std::vector<long>& phi = cyclotomic_poly(N);
  int deg = static_cast<int>(phi.size()) - 1;
  std::vector<Rat> w = coeffs;
  for (int i = static_cast<int>(w.size()) - 1; i >= deg; --i) {
    if (w[i] == 0) continue;
    Rat c = w[i];
    for (int j = 0; j <= deg; ++j) w[i - deg + j] -= c * phi[j];
  }
  Cyclo r(N);
  for (int i = 0; i < deg && i < static_cast<int>(w.size()); ++i) r.c_[i] = w[i];
  return r;
}

Cyclo Cyclo::from_rat(int N, const Rat& q) {
  Cyclo r(N);
  r.c_[0] = q;
  return r;
}

Cyclo Cyclo::root(int N, long j) {
  std::vector<Rat> v(N);
  v[mod(j, N)] = 1;
  return cyclo_canonical(N, v);
}

bool Cyclo::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return c_[0];
}

Cyclo Cyclo::lift(int M) const {
  if (M == N_) return *this;
  if (M % N_) throw std::domain_error("lift target must be a multiple of the level");
  int step = M / N_;
  std::vector<Rat> v(M);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  return cyclo_canonical(M, v);
}

Cyclo Cyclo::conj() const {
  std::vector<Rat> v(N_);
  for (std::size_t i = 0; i < c_.size(); ++i) v[mod(-static_cast<long>(i), N_)] += c_[i];
  return cyclo_canonical(N_, v);
}

namespace {

int common_level(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.N_ != N_) {
    int M = common_level(N_, o.N_);
    *this = lift(M);
    return *this += o.lift(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.N_ != N_) {
    int M = common_level(N_, o.N_);
    *this = lift(M);
    return *this *= o.lift(M);
  }
  std::vector<Rat> prod(2 * c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = cyclo_canonical(N_, prod);
  return *this;
}

Cyclo& Cyclo::operator*=(const Rat& q) {
  for (Rat& x : c_) x *= q;
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.N_ != b.N_) {
    int M = common_level(a.N_, b.N_);
    return a.lift(M).c_ == b.lift(M).c_;
  }
  return a.c_ == b.c_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Solve (multiplication by *this) x = 1 by Gaussian elimination.
  int n = static_cast<int>(c_.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (int j = 0; j < n; ++j) {
    Cyclo col = *this * Cyclo::root(N_, j);
    for (int i = 0; i < n; ++i) a[i][j] = col.c_[i];
  }
  a[0][n] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular cyclotomic element");
    std::swap(a[piv], a[col]);
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  Cyclo r(N_);
  for (int i = 0; i < n; ++i) r.c_[i] = a[i][n] / a[i][i];
  return r;
}

}  // namespace eisp
