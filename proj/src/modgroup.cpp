#include "eisp/modgroup.hpp"

#include <stdexcept>

#include "eisp/errors.hpp"
#include "eisp/rat.hpp"

namespace eisp {

std::string to_string(const Mat2& m) {
  return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" + std::to_string(m.c) + "," +
         std::to_string(m.d) + ")";
}

namespace {

long long floor_div(long long x, long long y) {
  long long q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

// nearest integer to x / y
long long round_div(long long x, long long y) {
  if (y < 0) {
    x = -x;
    y = -y;
  }
  return floor_div(2 * x + y, 2 * y);
}

}  // namespace

CompactWord decompose_compact(const Mat2& g) {
  if (g.det() != 1) throw PreconditionError("decompose_ST needs det 1");
  // Right-multiply by T^{-q} and S until the bottom-left entry vanishes;
  // record the inverses, using S^{-1} = -S and tracking the sign.
  Mat2 cur = g;
  std::vector<WordToken> right;  // factors in the order they multiply on the right
  bool negative = false;
  while (cur.c != 0) {
    long long q = round_div(cur.d, cur.c);
    if (q != 0) {
      cur = cur * Mat2::T(-q);
      right.push_back({false, q});
    }
    cur = cur * Mat2::S();
    right.push_back({true, 1});  // S^{-1} = -S
    negative = !negative;
  }
  // cur = a * T^{ab} with a = +-1
  if (cur.a == -1) negative = !negative;
  long long n = cur.a * cur.b;
  CompactWord w;
  if (negative) {
    w.push_back({true, 1});
    w.push_back({true, 1});
  }
  if (n != 0) w.push_back({false, n});
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    if (!it->is_S && !w.empty() && !w.back().is_S) {
      w.back().power += it->power;
      if (w.back().power == 0) w.pop_back();
      continue;
    }
    w.push_back(*it);
  }
  return w;
}

STWord expand(const CompactWord& w) {
  STWord out;
  for (const WordToken& t : w) {
    if (t.is_S) {
      out.push_back(Letter::S);
      continue;
    }
    Letter l = t.power > 0 ? Letter::T : Letter::Tinv;
    long long n = t.power > 0 ? t.power : -t.power;
    for (long long i = 0; i < n; ++i) out.push_back(l);
  }
  return out;
}

STWord decompose_ST(const Mat2& g) { return expand(decompose_compact(g)); }

Mat2 word_product(const STWord& w) {
  Mat2 r;
  for (Letter l : w) {
    switch (l) {
      case Letter::S: r = r * Mat2::S(); break;
      case Letter::T: r = r * Mat2::T(1); break;
      case Letter::Tinv: r = r * Mat2::T(-1); break;
    }
  }
  return r;
}

Mat2 word_product(const CompactWord& w) {
  Mat2 r;
  for (const WordToken& t : w) r = r * (t.is_S ? Mat2::S() : Mat2::T(t.power));
  return r;
}

ResiduePair::ResiduePair(int n, long a, long b) : N(n), l1(mod(a, n)), l2(mod(b, n)) {
  if (n < 1) throw PreconditionError("modulus must be positive");
}

std::string to_string(const ResiduePair& r) {
  return "(" + std::to_string(r.l1) + "," + std::to_string(r.l2) + ") mod " + std::to_string(r.N);
}

ResiduePair act_residue(const ResiduePair& lam, const Mat2& g) {
  long long N = lam.N;
  long long a = g.a % N, b = g.b % N, c = g.c % N, d = g.d % N;
  return ResiduePair(lam.N, static_cast<long>((lam.l1 * a + lam.l2 * c) % N),
                     static_cast<long>((lam.l1 * b + lam.l2 * d) % N));
}

std::vector<ResiduePair> all_residues(int N) {
  std::vector<ResiduePair> v;
  for (long a = 0; a < N; ++a)
    for (long b = 0; b < N; ++b) v.emplace_back(N, a, b);
  return v;
}

bool in_index_set(int k, const ResiduePair& lam) {
  if (k == 2) return !lam.is_zero();
  if (k >= 4 && k % 2 == 0) return true;
  if (k >= 3 && k % 2 == 1) return lam.N >= 3;
  return false;
}

std::vector<ResiduePair> index_set(int N, int k) {
  std::vector<ResiduePair> v;
  for (const ResiduePair& r : all_residues(N))
    if (in_index_set(k, r)) v.push_back(r);
  return v;
}

int CosetTable::encode(long a, long b, long c, long d) const {
  return static_cast<int>(((a * N_ + b) * N_ + c) * N_ + d);
}

CosetTable::CosetTable(int N) : N_(N) {
  if (N < 1) throw PreconditionError("level must be positive");
  for (long a = 0; a < N; ++a)
    for (long b = 0; b < N; ++b)
      for (long c = 0; c < N; ++c)
        for (long d = 0; d < N; ++d) {
          if (mod(a * d - b * c - 1, N) != 0) continue;
          index_.emplace(encode(a, b, c, d), static_cast<int>(elems_.size()));
          elems_.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), static_cast<int>(d)});
        }
  id_ = index_of(Mat2::identity());
  int n = size();
  rT_.resize(n);
  rS_.resize(n);
  rTi_.resize(n);
  rSi_.resize(n);
  for (int i = 0; i < n; ++i) {
    rT_[i] = right_mul(i, Mat2::T(1));
    rS_[i] = right_mul(i, Mat2::S());
    rTi_[i] = right_mul(i, Mat2::T(-1));
    rSi_[i] = right_mul(i, Mat2::S().inverse());
  }
}

Mat2 CosetTable::lift(int i) const {
  const auto& e = elems_[i];
  return {e[0], e[1], e[2], e[3]};
}

int CosetTable::index_of(const Mat2& g) const {
  long long N = N_;
  auto r = [N](long long x) { return static_cast<long>(((x % N) + N) % N); };
  auto it = index_.find(encode(r(g.a), r(g.b), r(g.c), r(g.d)));
  if (it == index_.end()) throw PreconditionError("matrix is not invertible mod N");
  return it->second;
}

int CosetTable::right_mul(int i, const Mat2& g) const {
  long long N = N_;
  auto r = [N](long long x) { return ((x % N) + N) % N; };
  Mat2 h{r(g.a), r(g.b), r(g.c), r(g.d)};
  return index_of(lift(i) * h);
}

long long CosetTable::expected_order(int N) {
  long long r = static_cast<long long>(N) * N * N;
  int n = N;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r = r / (static_cast<long long>(p) * p) * (static_cast<long long>(p) * p - 1);
  }
  return r;
}

}  // namespace eisp
