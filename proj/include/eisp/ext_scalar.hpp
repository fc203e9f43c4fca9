#pragma once

#include <compare>
#include <map>
#include <string>

#include "eisp/rat.hpp"

namespace eisp {

// PL(w; x) := Li_w(e(x)) / (-2 pi i)^w, x a rational in [0, 1).
struct PolylogSymbol {
  int weight = 1;
  Rat arg;

  friend bool operator==(const PolylogSymbol& a, const PolylogSymbol& b) {
    return a.weight == b.weight && a.arg == b.arg;
  }
  friend bool operator<(const PolylogSymbol& a, const PolylogSymbol& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return cmp(a.arg, b.arg) < 0;
  }
};

std::string to_string(const PolylogSymbol& s);

// rational + sum of rational multiples of canonical polylog symbols.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(const Rat& q) : rational_(q) {}  // NOLINT: implicit on purpose

  const Rat& rational_part() const { return rational_; }
  const std::map<PolylogSymbol, Rat>& symbol_terms() const { return symbols_; }

  bool is_rational() const { return symbols_.empty(); }
  bool is_zero() const { return rational_ == 0 && symbols_.empty(); }

  ExtScalar& operator+=(const ExtScalar& o);
  ExtScalar& operator-=(const ExtScalar& o);
  ExtScalar& operator*=(const Rat& q);

  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
  friend ExtScalar operator*(ExtScalar a, const Rat& q) { return a *= q; }
  friend ExtScalar operator*(const Rat& q, ExtScalar a) { return a *= q; }
  ExtScalar operator-() const { return *this * Rat(-1); }
  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    return a.rational_ == b.rational_ && a.symbols_ == b.symbols_;
  }

  // Adds c * PL(w; x) after reduction to the canonical range.
  void add_symbol(int w, const Rat& x, const Rat& c);

  // Raw insertion of an already-canonical symbol; no reduction.
  void add_canonical(const PolylogSymbol& s, const Rat& c);

 private:
  Rat rational_;
  std::map<PolylogSymbol, Rat> symbols_;
};

// Rewrites raw PL(w; x) terms into canonical form: x in [0, 1/2], even-weight
// symbols at 0 and 1/2 replaced by their rational values.
ExtScalar symbol_reduce(int w, const std::map<Rat, Rat>& raw);

std::string to_string(const ExtScalar& x);

}  // namespace eisp
