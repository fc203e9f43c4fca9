#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace eisp {

struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  long long det() const { return a * d - b * c; }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // assumes det 1
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 S() { return {0, -1, 1, 0}; }
  static Mat2 T(long long n = 1) { return {1, n, 0, 1}; }
};

std::string to_string(const Mat2& m);

enum class Letter { S, T, Tinv };
using STWord = std::vector<Letter>;

// Run-length form: T-powers as single tokens.
struct WordToken {
  bool is_S = false;
  long long power = 1;  // T^power when !is_S; always 1 for S
};
using CompactWord = std::vector<WordToken>;

CompactWord decompose_compact(const Mat2& g);
STWord decompose_ST(const Mat2& g);
STWord expand(const CompactWord& w);
Mat2 word_product(const STWord& w);
Mat2 word_product(const CompactWord& w);

struct ResiduePair {
  int N = 1;
  long l1 = 0, l2 = 0;

  ResiduePair() = default;
  ResiduePair(int n, long a, long b);
  bool is_zero() const { return l1 == 0 && l2 == 0; }
  friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
};

std::string to_string(const ResiduePair& r);

// (l1, l2) * g reduced mod N.
ResiduePair act_residue(const ResiduePair& lam, const Mat2& g);

// All residue pairs mod N in lexicographic order.
std::vector<ResiduePair> all_residues(int N);
// The admissible parameter set I_{N,k}.
bool in_index_set(int k, const ResiduePair& lam);
std::vector<ResiduePair> index_set(int N, int k);

// SL2(Z/N) with right-multiplication tables; element order is lexicographic.
class CosetTable {
 public:
  explicit CosetTable(int N);

  int level() const { return N_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::array<int, 4>& element(int i) const { return elems_[i]; }
  Mat2 lift(int i) const;  // entries in [0, N), not necessarily det 1 over Z

  int index_of(const Mat2& g) const;
  int right_mul(int i, const Mat2& g) const;
  int right_T(int i) const { return rT_[i]; }
  int right_S(int i) const { return rS_[i]; }
  int right_Tinv(int i) const { return rTi_[i]; }
  int right_Sinv(int i) const { return rSi_[i]; }
  int identity_index() const { return id_; }

  static long long expected_order(int N);

 private:
  int encode(long a, long b, long c, long d) const;
  int N_;
  int id_ = 0;
  std::vector<std::array<int, 4>> elems_;
  std::unordered_map<int, int> index_;
  std::vector<int> rT_, rS_, rTi_, rSi_;
};

}  // namespace eisp
