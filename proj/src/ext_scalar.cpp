#include "eisp/ext_scalar.hpp"

#include <stdexcept>

#include "eisp/bernoulli.hpp"
#include "eisp/errors.hpp"

namespace eisp {

std::string to_string(const PolylogSymbol& s) {
  return "PL(" + std::to_string(s.weight) + ";" + to_string(s.arg) + ")";
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
  rational_ += o.rational_;
  for (const auto& [s, c] : o.symbols_) add_canonical(s, c);
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
  rational_ -= o.rational_;
  for (const auto& [s, c] : o.symbols_) add_canonical(s, -c);
  return *this;
}

ExtScalar& ExtScalar::operator*=(const Rat& q) {
  if (q == 0) {
    rational_ = 0;
    symbols_.clear();
    return *this;
  }
  rational_ *= q;
  for (auto& [s, c] : symbols_) c *= q;
  return *this;
}

void ExtScalar::add_canonical(const PolylogSymbol& s, const Rat& c) {
  if (c == 0) return;
  auto it = symbols_.find(s);
  if (it == symbols_.end()) {
    symbols_.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second == 0) symbols_.erase(it);
}

void ExtScalar::add_symbol(int w, const Rat& x_in, const Rat& c) {
  if (w < 1) throw std::domain_error("polylog weight must be positive");
  if (c == 0) return;
  Rat x = frac_part(x_in);
  Rat wfact(factorial(w));
  const Rat half(1, 2);
  if (x == 0) {
    if (w == 1) throw DivergenceError("divergent symbol PL(1; 0)");
    if (w % 2 == 0) {
      rational_ += c * (-bernoulli_number(w) / (2 * wfact));
      return;
    }
    add_canonical({w, x}, c);
    return;
  }
  if (x == half) {
    if (w % 2 == 0) {
      rational_ += c * (-bernoulli_value(w, half) / (2 * wfact));
      return;
    }
    add_canonical({w, x}, c);
    return;
  }
  if (x > half) {
    // PL(w; x) = -B_w(1-x)/w! - (-1)^w PL(w; 1-x)
    Rat y = 1 - x;
    rational_ += c * (-bernoulli_value(w, y) / wfact);
    add_canonical({w, y}, (w % 2 == 0) ? Rat(-c) : c);
    return;
  }
  add_canonical({w, x}, c);
}

ExtScalar symbol_reduce(int w, const std::map<Rat, Rat>& raw) {
  ExtScalar r;
  for (const auto& [x, c] : raw) r.add_symbol(w, x, c);
  return r;
}

std::string to_string(const ExtScalar& x) {
  std::string s = to_string(x.rational_part());
  for (const auto& [sym, c] : x.symbol_terms()) s += " + (" + to_string(c) + ")*" + to_string(sym);
  return s;
}

}  // namespace eisp
