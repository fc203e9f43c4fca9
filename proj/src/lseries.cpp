#include "eisp/lseries.hpp"

#include <cmath>

#include "eisp/bernoulli.hpp"
#include "eisp/errors.hpp"
#include "eisp/precision.hpp"
#include "eisp/specfun.hpp"

namespace eisp {

ExtScalar LValueClosed::xi() const {
  ExtScalar x(bernoulli_coeff);
  for (const auto* t : {&top_term, &bottom_term})
    if (*t) x.add_symbol((*t)->first.weight, (*t)->first.arg, (*t)->second);
  return x;
}

BigComplex LValueClosed::value(prec_t p) const { return i_pow(r, p) * ext_value(xi(), p); }

LValueClosed lvalue_closed(int k, const ResiduePair& lambda, int r) {
  if (r < 1 || r > k - 1) throw PreconditionError("L-value argument r must lie in [1, k-1]");
  if (!in_index_set(k, lambda)) throw IndexSetError("parameter outside I_{N,k}");
  const int N = lambda.N;
  LValueClosed v;
  v.k = k;
  v.lambda = lambda;
  v.r = r;
  v.bernoulli_coeff = bernoulli_value(k - r, make_rat(lambda.l1, N)) * bernoulli_value(r, make_rat(lambda.l2, N)) /
                      Rat(factorial(k - 1) * r * (k - r));
  if (r == k - 1 && lambda.l1 == 0)
    v.top_term = {{k - 1, make_rat(lambda.l2, N)}, Rat((k % 2) ? -1 : 1, k - 1)};
  if (r == 1 && lambda.l2 == 0)
    v.bottom_term = {{k - 1, frac_part(make_rat(-lambda.l1, N))}, Rat(-1, k - 1)};
  return v;
}

namespace {

// Smallest M with 2 pi M / N - e log M >= p log 2 + 8.
long terms_for(int N, double e, prec_t p) {
  double target = static_cast<double>(p) * std::log(2.0) + 8;
  long M = 1;
  while (2 * M_PI * M / N - e * std::log(static_cast<double>(M)) < target) ++M;
  return M;
}

std::optional<long> as_integer(const BigComplex& s) {
  if (!s.im.is_zero()) return std::nullopt;
  double d = s.re.to_double();
  double r = std::nearbyint(d);
  if (std::fabs(r) > 1e9 || !(s.re == Real(static_cast<long>(r), s.re.prec()))) return std::nullopt;
  return static_cast<long>(r);
}

// Gamma(s, alpha) alpha^{-s}
BigComplex incomplete_mellin(const BigComplex& s, const Real& alpha, prec_t wp) {
  if (auto n = as_integer(s)) return BigComplex(upper_gamma_int(*n, alpha, wp) / pow(alpha, *n));
  return upper_gamma(s, alpha, wp) / pow(alpha, s);
}

}  // namespace

long lseries_terms(int k, int N, prec_t p) { return terms_for(N, 3.0 * k + 4, p); }

LFunctionSpec lspec_eisenstein(int k, const ResiduePair& lambda, long M, prec_t p) {
  if (M <= 0) M = lseries_terms(k, lambda.N, p);
  LFunctionSpec spec;
  spec.f = e_fourier(k, lambda, M);
  spec.g = e_fourier(k, act_residue(lambda, Mat2::S().inverse()), M);
  return spec;
}

BigComplex lvalue_numeric(const LFunctionSpec& spec, const BigComplex& s, prec_t p) {
  const int k = spec.f.k;
  const int N = spec.f.N;
  if (spec.f.nonholo || spec.g.nonholo) throw PreconditionError("L-function needs a holomorphic form");
  if (spec.g.k != k || spec.g.N != N) throw PreconditionError("inconsistent L-function data");
  if (auto n = as_integer(s); n && (*n == 0 || *n == k)) throw PoleError("completed L-function has a pole at s = " + std::to_string(*n));
  double sig = std::fabs(s.re.to_double());
  double ks = std::fabs(k - s.re.to_double());
  long need = terms_for(N, std::max(sig, ks) + k + 3, p);
  long M = std::min(spec.f.M, spec.g.M);
  if (M < need) throw PrecisionBudgetError("L-series truncation too short: need " + std::to_string(need) + " terms");

  prec_t wp = p + kGuardBits + 16;
  BigComplex sw = s.with_prec(wp);
  BigComplex ks_c = BigComplex(Real(static_cast<long>(k), wp)) - sw;
  Real two_pi_over_N = ldexp(const_pi(wp), 1) / static_cast<long>(N);
  BigComplex acc_f(wp), acc_g(wp);
  for (long j = 1; j <= need; ++j) {
    Real alpha = two_pi_over_N * j;
    const Cyclo& a = spec.f.coeffs[j - 1];
    const Cyclo& b = spec.g.coeffs[j - 1];
    if (!a.is_zero()) acc_f += cyclo_value(a, wp) * incomplete_mellin(sw, alpha, wp);
    if (!b.is_zero()) acc_g += cyclo_value(b, wp) * incomplete_mellin(ks_c, alpha, wp);
  }
  BigComplex ik = i_pow(-k, wp);
  BigComplex finf(Real(spec.f.constant, wp));
  BigComplex ginf(Real(spec.g.constant, wp));
  BigComplex r = acc_f + ik * acc_g;
  r -= ik * ginf / ks_c;  // i^{-k} g_inf / (s - k)
  r -= finf / sw;
  return r.with_prec(p);
}

namespace {

BigComplex lerch_product_at(int k, const ResiduePair& lambda, const BigComplex& s, prec_t wp) {
  const int N = lambda.N;
  BigComplex sh = s - BigComplex(Real(static_cast<long>(k - 1), wp));
  BigComplex a = polylog_s(make_rat(lambda.l2, N), s, wp) * zeta_star(make_rat(lambda.l1, N), sh, wp);
  BigComplex b = polylog_s(frac_part(make_rat(-lambda.l2, N)), s, wp) * zeta_star(make_rat(-lambda.l1, N), sh, wp);
  BigComplex sum = (k % 2) ? a - b : a + b;
  // Gamma(s) / (2 pi)^s / (k-1)!
  BigComplex pre = exp(log_gamma(s, wp) - s * log(BigComplex(ldexp(const_pi(wp), 1))));
  return pre * sum / Real(factorial(k - 1), wp);
}

}  // namespace

BigComplex lvalue_lerch_product(int k, const ResiduePair& lambda, const BigComplex& s, prec_t p) {
  if (auto n = as_integer(s); n && *n <= 0) throw PoleError("Gamma factor has a pole at s = " + std::to_string(*n));
  auto n = as_integer(s);
  if (n && *n == 1 && lambda.l2 == 0) {
    // Li_s(1) has a pole at s = 1 that cancels between the two products.
    prec_t wp = 2 * p + kGuardBits;
    BigComplex h(ldexp(Real(1L, wp), -static_cast<long>(p / 2 + 8)));
    BigComplex sw = s.with_prec(wp);
    BigComplex up = lerch_product_at(k, lambda, sw + h, wp);
    BigComplex dn = lerch_product_at(k, lambda, sw - h, wp);
    return ((up + dn) / 2L).with_prec(p);
  }
  prec_t wp = p + kGuardBits;
  return lerch_product_at(k, lambda, s.with_prec(wp), wp).with_prec(p);
}

}  // namespace eisp
