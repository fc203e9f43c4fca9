#include "eisp/period_poly.hpp"

#include <sstream>

#include "eisp/errors.hpp"
#include "eisp/specfun.hpp"

namespace eisp {

PeriodPoly::PeriodPoly(int k) : k_(k), c_(k - 1) {
  if (k < 2) throw PreconditionError("period polynomials need weight >= 2");
}

PeriodPoly::PeriodPoly(int k, std::vector<ExtScalar> coeffs) : k_(k), c_(std::move(coeffs)) {
  if (k < 2) throw PreconditionError("period polynomials need weight >= 2");
  if (static_cast<int>(c_.size()) > k - 1) throw PreconditionError("degree exceeds k-2");
  c_.resize(k - 1);
}

bool PeriodPoly::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool PeriodPoly::is_rational() const {
  for (const auto& x : c_)
    if (!x.is_rational()) return false;
  return true;
}

PeriodPoly& PeriodPoly::operator+=(const PeriodPoly& o) {
  if (o.k_ != k_) throw PreconditionError("weight mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PeriodPoly& PeriodPoly::operator-=(const PeriodPoly& o) {
  if (o.k_ != k_) throw PreconditionError("weight mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PeriodPoly& PeriodPoly::operator*=(const Rat& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

namespace {

// Coefficients of (uX+v)^n, X^0 first.
std::vector<Int> linear_power(const Int& u, const Int& v, int n) {
  std::vector<Int> r(n + 1);
  for (int j = 0; j <= n; ++j) {
    Int up, vp;
    mpz_pow_ui(up.get_mpz_t(), u.get_mpz_t(), j);
    mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), n - j);
    r[j] = binomial(n, j) * up * vp;
  }
  return r;
}

}  // namespace

PeriodPoly PeriodPoly::act(const Mat2& g) const {
  const int n = k_ - 2;
  Int a(static_cast<long>(g.a)), b(static_cast<long>(g.b)), c(static_cast<long>(g.c)), d(static_cast<long>(g.d));
  PeriodPoly out(k_);
  for (int i = 0; i <= n; ++i) {
    if (c_[i].is_zero()) continue;
    std::vector<Int> p1 = linear_power(a, b, i);
    std::vector<Int> p2 = linear_power(c, d, n - i);
    std::vector<Int> prod(n + 1);
    for (int x = 0; x <= i; ++x)
      for (int y = 0; y <= n - i; ++y) prod[x + y] += p1[x] * p2[y];
    for (int j = 0; j <= n; ++j)
      if (prod[j] != 0) out.c_[j] += c_[i] * Rat(prod[j]);
  }
  return out;
}

std::vector<BigComplex> PeriodPoly::numeric(prec_t p) const {
  std::vector<BigComplex> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(ext_value(x, p));
  return r;
}

PeriodPoly rational_poly(int k, const std::vector<Rat>& coeffs) {
  std::vector<ExtScalar> c(coeffs.begin(), coeffs.end());
  return PeriodPoly(k, std::move(c));
}

std::string to_string(const PeriodPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree_bound(); i >= 0; --i) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(p[i]) << ")";
    if (i > 0) os << "*X";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace eisp
