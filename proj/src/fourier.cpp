#include "eisp/fourier.hpp"

#include <mutex>

#include "eisp/bernoulli.hpp"
#include "eisp/errors.hpp"
#include "eisp/precision.hpp"
#include "eisp/specfun.hpp"

namespace eisp {

namespace {

std::mutex g_div_mutex;
std::map<long, std::vector<std::vector<long>>> g_div_cache;

void check_weight(int k, const ResiduePair& lambda) {
  if (k < 2) throw IndexSetError("weight must be at least 2");
  if (k == 2 && lambda.is_zero()) return;  // nonholomorphic e_2 allowed
  if (!in_index_set(k, lambda)) throw IndexSetError("parameter outside I_{N,k}: k=" + std::to_string(k) + " " + to_string(lambda));
}

Int ipow(long b, long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b), static_cast<unsigned long>(e));
  if (b < 0 && (e % 2)) r = -r;
  return r;
}

BigComplex cplx(long n, prec_t p) { return BigComplex(Real(n, p)); }

// (x i)^n for real x
BigComplex imag_pow(const Real& x, long n) {
  BigComplex r = i_pow(n, x.prec());
  return r * pow(x, n);
}

}  // namespace

const std::vector<std::vector<long>>& divisor_table(long M) {
  std::lock_guard<std::mutex> lk(g_div_mutex);
  auto it = g_div_cache.find(M);
  if (it != g_div_cache.end()) return it->second;
  std::vector<std::vector<long>> t(M + 1);
  for (long d = 1; d <= M; ++d)
    for (long j = d; j <= M; j += d) t[j].push_back(d);
  return g_div_cache.emplace(M, std::move(t)).first->second;
}

HoloFourier e_fourier(int k, const ResiduePair& lambda, long M) {
  check_weight(k, lambda);
  const int N = lambda.N;
  HoloFourier f;
  f.k = k;
  f.N = N;
  f.lambda = lambda;
  f.M = M;
  f.constant = -bernoulli_value(k, make_rat(lambda.l1, N)) / Rat(factorial(k));
  if (k == 2 && lambda.is_zero()) {
    f.nonholo = true;
    f.nonholo_coeff = 1;
  }
  Rat scale(1, factorial(k - 1) * ipow(N, k - 1));
  scale.canonicalize();
  const auto& divs = divisor_table(M);
  const long sign = (k % 2) ? -1 : 1;
  f.coeffs.reserve(M);
  for (long j = 1; j <= M; ++j) {
    std::vector<Rat> v(N);
    for (long n : divs[j]) {
      long m = j / n;
      Int nk = ipow(n, k - 1);
      if (mod(n - lambda.l1, N) == 0) v[mod(m * lambda.l2, N)] += Rat(nk);
      if (mod(n + lambda.l1, N) == 0) v[mod(-m * lambda.l2, N)] += Rat(sign * nk);
    }
    Cyclo c = cyclo_canonical(N, v);
    c *= scale;
    f.coeffs.push_back(std::move(c));
  }
  return f;
}

BigComplex raw_scale(int k, prec_t p) {
  return imag_pow(-ldexp(const_pi(p), 1), k);
}

BigComplex zeta_star(const Rat& x, const BigComplex& s, prec_t p) {
  Rat f = frac_part(x);
  return hurwitz_zeta(f == 0 ? Rat(1) : f, s, p);
}

NumericHolo g_fourier(int k, const ResiduePair& lambda, long M, prec_t p) {
  if (k < 2) throw IndexSetError("weight must be at least 2");
  const int N = lambda.N;
  prec_t wp = p + kGuardBits;
  NumericHolo g;
  g.k = k;
  g.N = N;
  g.lambda = lambda;
  g.M = M;
  g.A0 = BigComplex(wp);
  if (lambda.l1 == 0) {
    // sum over n = lambda2 mod N, n != 0, of n^{-k}
    BigComplex s = cplx(k, wp);
    BigComplex pos = zeta_star(make_rat(lambda.l2, N), s, wp);
    BigComplex neg = zeta_star(make_rat(mod(-lambda.l2, N), N), s, wp);
    g.A0 = (pos + neg * ((k % 2) ? -1L : 1L)) / pow(Real(static_cast<long>(N), wp), static_cast<long>(k));
  }
  g.inv_v = BigComplex(wp);
  if (k == 2) g.inv_v = BigComplex(-const_pi(wp) / static_cast<long>(N * N));
  BigComplex pre = raw_scale(k, wp) / Real(Int(factorial(k - 1) * ipow(N, k)), wp);
  const auto& divs = divisor_table(M);
  g.A.reserve(M);
  for (long j = 1; j <= M; ++j) {
    BigComplex acc(wp);
    for (long d : divs[j]) {
      for (long n : {d, -d}) {
        long q = j / n;  // j/n
        if (mod(q - lambda.l1, N) != 0) continue;
        BigComplex t = e_rat(make_rat(n * lambda.l2, N), wp) * Real(ipow(n, k - 1), wp);
        if (n < 0) acc -= t; else acc += t;
      }
    }
    g.A.push_back((acc * pre).with_prec(p));
  }
  g.A0 = g.A0.with_prec(p);
  g.inv_v = g.inv_v.with_prec(p);
  return g;
}

namespace {

// Common generator for the Maass families. For the congruence series the
// factorization j = m n carries the congruence on m and the phase e(n l2/N);
// for the elliptic series the congruence is on n and the phase is e(m l2/N).
MaassFourier maass_common(int k, int l, const ResiduePair& lambda, long M, prec_t p, bool elliptic) {
  if (k < 0 || l < 0 || k + l < 3) throw PreconditionError("Maass series needs k, l >= 0 and k + l >= 3");
  const int N = lambda.N;
  const int w = k + l;
  prec_t wp = p + kGuardBits + 16;
  Real pi = const_pi(wp);
  Real twopi = ldexp(pi, 1);
  MaassFourier f;
  f.k = k;
  f.l = l;
  f.N = N;
  f.lambda = lambda;
  f.M = M;
  f.elliptic = elliptic;

  BigComplex m2pii(Real(wp), -twopi);  // -2 pi i
  BigComplex p2pii(Real(wp), twopi);   // 2 pi i
  Rat bl = formal_binomial(-l, k - 1);
  Rat bk = formal_binomial(-k, l - 1);
  // (-2 i)^{w-1}
  BigComplex m2i_pow = imag_pow(Real(-2L, wp), w - 1);
  if (elliptic) {
    f.A0 = raw_scale(w, wp) * Real(-bernoulli_value(w, make_rat(lambda.l1, N)) / Rat(factorial(w)), wp);
    f.C0 = BigComplex(wp);
    if (lambda.l1 == 0) {
      BigComplex acc(wp);
      if (bl != 0) acc += polylog(w - 1, make_rat(lambda.l2, N), wp) * Real(bl, wp);
      if (bk != 0) acc += polylog(w - 1, make_rat(-lambda.l2, N), wp) * Real(bk, wp);
      f.C0 = -(p2pii * acc) / m2i_pow;
    }
  } else {
    f.A0 = BigComplex(wp);
    if (lambda.l1 == 0) {
      BigComplex s = cplx(w, wp);
      BigComplex pos = zeta_star(make_rat(lambda.l2, N), s, wp);
      BigComplex neg = zeta_star(make_rat(mod(-lambda.l2, N), N), s, wp);
      f.A0 = (pos + neg * ((w % 2) ? -1L : 1L)) / pow(Real(static_cast<long>(N), wp), static_cast<long>(w));
    }
    BigComplex acc(wp);
    BigComplex s1 = cplx(w - 1, wp);
    if (bl != 0) acc += zeta_star(make_rat(lambda.l1, N), s1, wp) * Real(bl, wp);
    if (bk != 0) acc += hurwitz_zeta(Rat(1) - make_rat(lambda.l1, N), s1, wp) * Real(bk, wp);
    f.C0 = -(p2pii * acc) / (m2i_pow * pow(Real(static_cast<long>(N), wp), static_cast<long>(w)));
  }

  // Per-r constants.
  std::vector<BigComplex> a_const(k), c_const(l);
  for (int r = 0; r < k; ++r) {
    long nexp = elliptic ? (k - r - 1) : (k - r);
    BigComplex c = m2pii * pow(m2pii, static_cast<long>(k - 1 - r)) * Real(formal_binomial(-l, r), wp);
    c /= imag_pow(Real(-2L, wp), l + r);
    c /= Real(Int(factorial(k - 1 - r) * ipow(N, nexp)), wp);
    a_const[r] = c;
  }
  for (int r = 0; r < l; ++r) {
    long nexp = elliptic ? (l - r - 1) : (l - r);
    BigComplex c = p2pii * pow(p2pii, static_cast<long>(l - 1 - r)) * Real(formal_binomial(-k, r), wp);
    c /= imag_pow(Real(2L, wp), k + r);
    c /= Real(Int(factorial(l - 1 - r) * ipow(N, nexp)), wp);
    c_const[r] = c;
  }

  const auto& divs = divisor_table(M);
  f.A.resize(M);
  f.C.resize(M);
  for (long j = 1; j <= M; ++j) {
    VPoly Aj, Cj;
    for (long d : divs[j]) {
      for (int sgn : {1, -1}) {
        long n = sgn * d;
        long m = j / n;
        // A_j family
        {
          long congr = elliptic ? n : m;
          long phase_var = elliptic ? m : n;
          if (mod(congr - lambda.l1, N) == 0) {
            BigComplex ph = e_rat(make_rat(phase_var * lambda.l2, N), wp);
            for (int r = 0; r < k; ++r) {
              if (a_const[r].is_zero()) continue;
              // sgn(n) n^{k-1-r} / m^{l+r}
              Rat rr(ipow(n, k - 1 - r), 1);
              rr /= Rat(ipow(m, l + r));
              if (n < 0) rr = -rr;
              BigComplex t = a_const[r] * ph * Real(rr, wp);
              auto [it, fresh] = Aj.try_emplace(l + r, t);
              if (!fresh) it->second += t;
            }
          }
        }
        // C_j family
        if (l > 0) {
          long congr = elliptic ? n : m;
          long target = elliptic ? -lambda.l1 : lambda.l1;
          if (mod(congr - target, N) == 0) {
            long phase_num = elliptic ? m * lambda.l2 : -n * lambda.l2;
            BigComplex ph = e_rat(make_rat(phase_num, N), wp);
            for (int r = 0; r < l; ++r) {
              if (c_const[r].is_zero()) continue;
              Rat rr(ipow(n, l - 1 - r), 1);
              rr /= Rat(ipow(m, k + r));
              if (n < 0) rr = -rr;
              BigComplex t = c_const[r] * ph * Real(rr, wp);
              auto [it, fresh] = Cj.try_emplace(k + r, t);
              if (!fresh) it->second += t;
            }
          }
        }
      }
    }
    for (auto& [e, c] : Aj) c = c.with_prec(p);
    for (auto& [e, c] : Cj) c = c.with_prec(p);
    f.A[j - 1] = std::move(Aj);
    f.C[j - 1] = std::move(Cj);
  }
  f.A0 = f.A0.with_prec(p);
  f.C0 = f.C0.with_prec(p);
  return f;
}

}  // namespace

MaassFourier maass_fourier(int k, int l, const ResiduePair& lambda, long M, prec_t p) {
  return maass_common(k, l, lambda, M, p, false);
}

MaassFourier elliptic_maass_fourier(int k, int l, const ResiduePair& lambda, long M, prec_t p) {
  return maass_common(k, l, lambda, M, p, true);
}

NumericHolo to_numeric(const HoloFourier& f, prec_t p, bool raw) {
  prec_t wp = p + kGuardBits;
  BigComplex sc = raw ? raw_scale(f.k, wp) : BigComplex(Real(1L, wp));
  NumericHolo g;
  g.k = f.k;
  g.N = f.N;
  g.lambda = f.lambda;
  g.M = f.M;
  g.A0 = (sc * Real(f.constant, wp)).with_prec(p);
  g.inv_v = BigComplex(p);
  if (f.nonholo) g.inv_v = (sc * (Real(f.nonholo_coeff, wp) / ldexp(const_pi(wp), 2))).with_prec(p);
  g.A.reserve(f.coeffs.size());
  for (const Cyclo& c : f.coeffs) g.A.push_back((sc * cyclo_value(c, wp)).with_prec(p));
  return g;
}

namespace {

BigComplex eval_q_series(const std::vector<BigComplex>& a, const BigComplex& q, prec_t wp) {
  // Horner from the top: sum_{j>=1} a_j q^j
  BigComplex acc(wp);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc += *it;
    acc *= q;
  }
  return acc;
}

}  // namespace

BigComplex eval_fourier(const HoloFourier& f, const BigComplex& tau, prec_t p) {
  if (tau.im.sign() <= 0) throw PreconditionError("tau must lie in the upper half plane");
  prec_t wp = p + kGuardBits;
  BigComplex q = e_of(tau.with_prec(wp) / static_cast<long>(f.N));
  std::vector<BigComplex> a;
  a.reserve(f.coeffs.size());
  for (const Cyclo& c : f.coeffs) a.push_back(cyclo_value(c, wp));
  BigComplex r = eval_q_series(a, q, wp) + BigComplex(Real(f.constant, wp));
  if (f.nonholo) r += BigComplex(Real(f.nonholo_coeff, wp) / (ldexp(const_pi(wp), 2) * tau.im.with_prec(wp)));
  return r.with_prec(p);
}

BigComplex eval_fourier(const NumericHolo& f, const BigComplex& tau, prec_t p) {
  if (tau.im.sign() <= 0) throw PreconditionError("tau must lie in the upper half plane");
  prec_t wp = p + kGuardBits;
  BigComplex q = e_of(tau.with_prec(wp) / static_cast<long>(f.N));
  BigComplex r = eval_q_series(f.A, q, wp) + f.A0;
  r += f.inv_v / tau.im.with_prec(wp);
  return r.with_prec(p);
}

BigComplex eval_fourier(const MaassFourier& f, const BigComplex& tau, prec_t p) {
  if (tau.im.sign() <= 0) throw PreconditionError("tau must lie in the upper half plane");
  prec_t wp = p + kGuardBits;
  BigComplex tw = tau.with_prec(wp);
  Real vinv = Real(1L, wp) / tw.im;
  int w = f.k + f.l;
  auto vpoly = [&](const VPoly& poly) {
    BigComplex s(wp);
    for (const auto& [e, c] : poly) s += c * pow(vinv, static_cast<long>(e));
    return s;
  };
  std::vector<BigComplex> a, c;
  a.reserve(f.A.size());
  c.reserve(f.C.size());
  for (const VPoly& x : f.A) a.push_back(vpoly(x));
  for (const VPoly& x : f.C) c.push_back(vpoly(x));
  BigComplex q = e_of(tw / static_cast<long>(f.N));
  BigComplex r = f.A0 + f.C0 * pow(vinv, static_cast<long>(w - 1));
  r += eval_q_series(a, q, wp);
  if (!c.empty()) r += eval_q_series(c, conj(q), wp);
  return r.with_prec(p);
}

}  // namespace eisp
