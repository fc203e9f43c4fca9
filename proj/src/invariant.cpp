#include "eisp/invariant.hpp"

#include <cmath>
#include <sstream>

#include "eisp/bernoulli.hpp"
#include "eisp/errors.hpp"
#include "eisp/fourier.hpp"
#include "eisp/lattice.hpp"
#include "eisp/lseries.hpp"
#include "eisp/precision.hpp"
#include "eisp/specfun.hpp"

namespace eisp {

BiPoly BiPoly::monomial(int a, int b, const Rat& c) {
  BiPoly p;
  p.add(a, b, c);
  return p;
}

Rat BiPoly::coeff(int a, int b) const {
  auto it = t_.find({a, b});
  return it == t_.end() ? Rat(0) : it->second;
}

void BiPoly::add(int a, int b, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace({a, b}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

BigComplex BiPoly::eval(const BigComplex& tau, prec_t p) const {
  BigComplex t = tau.with_prec(p), tb = conj(t);
  BigComplex acc(p);
  for (const auto& [k, c] : t_) acc += pow(t, static_cast<long>(k.first)) * pow(tb, static_cast<long>(k.second)) * Real(c, p);
  return acc;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(it->second) << ")*t^" << it->first.first << "*tb^" << it->first.second;
  }
  return os.str();
}

BiPoly maass_raise(int k, const BiPoly& p) {
  BiPoly out;
  for (const auto& [key, c] : p.terms()) {
    auto [a, b] = key;
    out.add(a, b, c * (k + a));
    if (a > 0) out.add(a - 1, b + 1, -c * a);
  }
  return out;
}

BiPoly dd_m_iterated(int m, const BiPoly& p) {
  BiPoly cur = p;
  for (int k = -2 * m + 2; k <= -m; ++k) cur = maass_raise(k, cur);
  return cur;
}

BiPoly dd_m_poly(int m, int n) {
  if (m < 2 || n < 0 || n > 2 * m - 1) throw PreconditionError("dd_m_poly needs m >= 2 and 0 <= n <= 2m-1");
  BiPoly out;
  Rat lead(factorial(m - 1));
  if ((m - 1) % 2) lead = -lead;
  for (int r = 0; r <= std::min(n, m - 1); ++r)
    out.add(n - r, r, lead * Rat(binomial(n, r)) * formal_binomial(2 * m - 2 - n, m - 1 - r));
  return out;
}

SymForm dd_m_symmetric_form(int m, int n) {
  if (n < 0 || n > 2 * m - 2) throw PreconditionError("symmetric form needs 0 <= n <= 2m-2");
  BiPoly p = dd_m_poly(m, n);
  for (const auto& [k, c] : p.terms())
    if (p.coeff(k.second, k.first) != c) throw PreconditionError("operator image is not symmetric in tau, taubar");
  // Peel off leading monomials tau^a taubar^b (a >= b) as e1^{a-b} e2^b.
  SymForm q;
  while (!p.is_zero()) {
    auto [key, c] = *p.terms().rbegin();
    auto [a, b] = key;
    int e1 = a - b, e2 = b;
    int x = m - 1 - e1 - e2;
    if (x < 0) throw PreconditionError("symmetric form exceeds degree m-1");
    q[{x, e1, e2}] += c;
    // subtract c (t + tb)^{e1} (t tb)^{e2}
    for (int i = 0; i <= e1; ++i) p.add(i + e2, e1 - i + e2, -c * Rat(binomial(e1, i)));
  }
  return q;
}

BiPoly expand_symmetric_form(int m, const SymForm& q) {
  // (t - tb)^{m-1} X^x Y^y Z^z = (t + tb)^y (t tb)^z when x + y + z = m - 1
  BiPoly out;
  for (const auto& [e, c] : q) {
    int x = e[0], y = e[1], z = e[2];
    if (x + y + z != m - 1) throw PreconditionError("symmetric form is not homogeneous of degree m-1");
    for (int i = 0; i <= y; ++i) out.add(i + z, y - i + z, c * Rat(binomial(y, i)));
  }
  return out;
}

BigComplex QuadLatticeData::tau(prec_t p) const {
  Real re(make_rat(-b, 2 * a), p);
  Real im = sqrt(Real(static_cast<long>(-discriminant()), p)) / Real(2 * a, p);
  return {re, im};
}

Real QuadLatticeData::volume(prec_t p) const { return Real(omega2 * omega2, p) * tau(p).im; }

void QuadLatticeData::validate() const {
  if (a <= 0) throw PreconditionError("minimal polynomial needs a > 0");
  if (discriminant() >= 0) throw PreconditionError("minimal polynomial must have negative discriminant");
  Int g = gcd(gcd(Int(a), Int(b)), Int(c));
  if (g != 1) throw PreconditionError("minimal polynomial must be primitive");
  if (omega2 <= 0) throw PreconditionError("omega2 must be a positive rational");
}

QuadLatticeData preset_gaussian() {
  QuadLatticeData d;
  d.a = 1, d.b = 0, d.c = 1;
  d.lambda = ResiduePair(1, 0, 0);
  d.preset = "gaussian";
  return d;
}

QuadLatticeData preset_eisenstein() {
  QuadLatticeData d;
  d.a = 1, d.b = -1, d.c = 1;
  d.lambda = ResiduePair(1, 0, 0);
  d.preset = "eisenstein";
  return d;
}

std::optional<QuadLatticeData> preset_by_name(const std::string& name) {
  if (name == "gaussian") return preset_gaussian();
  if (name == "eisenstein") return preset_eisenstein();
  return std::nullopt;
}

namespace {

struct RawSeries {
  BigComplex A0;
  std::vector<BigComplex> A;
};

RawSeries raw_series(int k, const ResiduePair& lambda, long M, prec_t wp) {
  HoloFourier f = e_fourier(k, lambda, M);
  if (f.nonholo) throw PreconditionError("Eichler integral needs a holomorphic series");
  NumericHolo g = to_numeric(f, wp);
  return {g.A0, g.A};
}

}  // namespace

BigComplex eichler_integral(int k, const ResiduePair& lambda, const BigComplex& tau, long M, prec_t p) {
  if (tau.im.sign() <= 0) throw PreconditionError("tau must lie in the upper half plane");
  const int N = lambda.N;
  prec_t wp = p + kGuardBits;
  RawSeries s = raw_series(k, lambda, M, wp);
  BigComplex t = tau.with_prec(wp);
  BigComplex r = s.A0 * pow(t, static_cast<long>(k - 1)) / static_cast<long>(k - 1);
  BigComplex twopii(Real(wp), ldexp(const_pi(wp), 1));
  BigComplex q = e_of(t / static_cast<long>(N));
  BigComplex qj(Real(1L, wp));
  Real scale = Real(factorial(k - 2), wp) * pow(Real(static_cast<long>(N), wp), static_cast<long>(k - 1));
  BigComplex sum(wp);
  for (long j = 1; j <= M; ++j) {
    qj *= q;
    if (s.A[j - 1].is_zero()) continue;
    sum += s.A[j - 1] * qj / pow(twopii * j, static_cast<long>(k - 1));
  }
  r += sum * scale;
  return r.with_prec(p);
}

Real re_m(const BigComplex& z, int m) { return (m % 2) ? z.re : z.im; }

PsiValue psi(int m, const QuadLatticeData& data, const ResiduePair& lambda, const BigComplex& tau, long M, prec_t p) {
  if (m < 2) throw PreconditionError("psi needs m >= 2");
  if (tau.im.sign() <= 0) throw PreconditionError("tau must lie in the upper half plane");
  if (lambda.N != data.level()) throw PreconditionError("lambda must live at the lattice level");
  const int k = 2 * m;
  const int N = lambda.N;
  if (!in_index_set(k, lambda)) throw IndexSetError("parameter outside I_{N,2m}");
  prec_t wp = p + kGuardBits + 16;
  BigComplex t = tau.with_prec(wp);
  BigComplex delta = t - conj(t);
  Real pi = const_pi(wp);
  BigComplex twopii(Real(wp), ldexp(pi, 1));

  RawSeries s = raw_series(k, lambda, M, wp);
  // L*(e_k, k-1) in raw normalization, shifted by i^{3-k}
  BigComplex lstar = raw_scale(k, wp) * lvalue_closed(k, lambda, k - 1).value(wp);
  BigComplex shift = i_pow(3 - k, wp) * lstar;

  BigComplex val = s.A0 / static_cast<long>(k - 1) * dd_m_poly(m, 2 * m - 1).eval(t, wp);
  Rat cst = dd_m_poly(m, 0).coeff(0, 0);
  val += shift * Real(cst, wp);

  // mult_j = (m-1)! sum_r binom(-m, r) delta^{m-1-r} (2 pi i j/N)^{m-1-r} / (m-1-r)!
  std::vector<Rat> mc(m);
  for (int r = 0; r < m; ++r) mc[r] = Rat(factorial(m - 1)) * formal_binomial(-m, r) / Rat(factorial(m - 1 - r));
  BigComplex q = e_of(t / static_cast<long>(N));
  BigComplex qj(Real(1L, wp));
  Real scale = Real(factorial(k - 2), wp) * pow(Real(static_cast<long>(N), wp), static_cast<long>(k - 1));
  BigComplex modes(wp);
  for (long j = 1; j <= M; ++j) {
    qj *= q;
    if (s.A[j - 1].is_zero()) continue;
    BigComplex w = delta * twopii * j / static_cast<long>(N);  // delta * 2 pi i j / N
    BigComplex mult(wp);
    BigComplex wpow(Real(1L, wp));
    for (int e = 0; e < m; ++e) {  // e = m-1-r
      mult += wpow * Real(mc[m - 1 - e], wp);
      wpow *= w;
    }
    modes += s.A[j - 1] * mult * qj / pow(twopii * j, static_cast<long>(k - 1));
  }
  val += modes * scale;

  long D = -data.discriminant();
  BigComplex pre = imag_unit(wp) * pow(sqrt(Real(D, wp)), static_cast<long>(m - 1)) /
                   (pow(pi, static_cast<long>(m)) * pow(delta, static_cast<long>(m - 1)));
  PsiValue out;
  out.m = m;
  out.data = data;
  out.lambda = lambda;
  out.tau = tau;
  out.value = (pre * val).with_prec(p);
  out.prec = p;
  out.M = M;

  // Tail estimate in doubles: |A_j| <= (2 pi)^k 2 j^k / (k-1)!, mult_j bounded termwise.
  double v = tau.im.to_double();
  double dl = 2 * v;
  double bound = 0;
  for (long j = M + 1; j <= 4 * M + 50; ++j) {
    double aj = std::pow(2 * M_PI, k) * 2 * std::pow(static_cast<double>(j), k) / std::tgamma(k);
    double mult = 0;
    for (int r = 0; r < m; ++r)
      mult += std::fabs(mc[r].get_d()) * std::pow(dl * 2 * M_PI * j / N, m - 1 - r);
    double term = std::tgamma(k - 1) * aj * std::pow(N, k - 1) / std::pow(2 * M_PI * j, k - 1) * mult *
                  std::exp(-2 * M_PI * j * v / N);
    bound += term;
  }
  bound *= std::pow(static_cast<double>(D), (m - 1) / 2.0) / (std::pow(M_PI, m) * std::pow(dl, m - 1));
  out.tail_bound = bound;
  double eps = std::ldexp(1.0, 16 - static_cast<int>(p));
  if (!(bound <= eps)) throw PrecisionBudgetError("Fourier tail of psi exceeds the tolerance; raise M");
  return out;
}

namespace {

BigComplex apply_mobius(const Mat2& g, const BigComplex& tau) {
  prec_t p = tau.prec();
  BigComplex num = tau * static_cast<long>(g.a) + BigComplex(Real(static_cast<long>(g.b), p));
  BigComplex den = tau * static_cast<long>(g.c) + BigComplex(Real(static_cast<long>(g.d), p));
  return num / den;
}

}  // namespace

BigComplex psi_shift(int m, const QuadLatticeData& data, const ResiduePair& lambda, const Mat2& g, long M, prec_t p) {
  if (g.det() != 1) throw PreconditionError("matrix must have determinant 1");
  prec_t wp = p + kGuardBits;
  BigComplex t = data.tau(wp);
  PsiValue base = psi(m, data, lambda, t, M, wp);
  PsiValue moved = psi(m, data, act_residue(lambda, g.inverse()), apply_mobius(g, t), M, wp);
  BigComplex tpi = pow(BigComplex(Real(wp), ldexp(const_pi(wp), 1)), static_cast<long>(m));
  return ((moved.value - base.value) / tpi).with_prec(p);
}

BigComplex lattice_value(int m, const QuadLatticeData& data, const ResiduePair& lambda, prec_t p) {
  prec_t wp = p + kGuardBits;
  LatticeParams lp{m, m, lambda, LatticeKind::Elliptic, 400};
  BigComplex e = lattice_sum(lp, data.tau(wp), wp);
  Real w = pow(Real(data.omega2, wp), static_cast<long>(2 * m));
  return (e / w).with_prec(p);
}

BigComplex psi_value_ratio(int m, const QuadLatticeData& data, const ResiduePair& lambda, long M, prec_t p) {
  prec_t wp = p + kGuardBits;
  PsiValue v = psi(m, data, lambda, data.tau(wp), M, wp);
  long D = -data.discriminant();
  // |D|^{m-1/2}
  Real dpow = pow(Real(D, wp), static_cast<long>(m - 1)) * sqrt(Real(D, wp));
  BigComplex ratio = BigComplex(re_m(v.value, m) * pow(const_pi(wp), static_cast<long>(m))) /
                     (BigComplex(dpow) * lattice_value(m, data, lambda, wp));
  return ratio.with_prec(p);
}

BigComplex hecke_assemble(int m, int delta, const std::vector<HeckeClass>& classes, long w_f, prec_t p) {
  if (w_f <= 0) throw PreconditionError("w_f must be positive");
  if (m < 2) throw PreconditionError("hecke_assemble needs m >= 2");
  prec_t wp = p + kGuardBits;
  BigComplex total(wp);
  for (const auto& cl : classes) {
    const int N = cl.data.level();
    if (cl.lambda_r.N != N) throw PreconditionError("class parameter must live at the lattice level");
    BigComplex inner(wp);
    for (const auto& lam : all_residues(N)) {
      BigComplex b = e_rat(make_rat(lam.l1 * cl.lambda_r.l2 - lam.l2 * cl.lambda_r.l1, N), wp);
      inner += b * lattice_value(m, cl.data, lam, wp);
    }
    Rat nb(1);
    int e = m + delta;
    for (int i = 0; i < std::abs(e); ++i) nb *= cl.norm_b;
    if (e < 0) nb = 1 / nb;
    total += inner * Real(nb / Rat(N * N), wp) / cl.chi.with_prec(wp);
  }
  return (total / w_f).with_prec(p);
}

}  // namespace eisp
