#pragma once

#include <vector>

#include "eisp/rat.hpp"

namespace eisp {

struct BernoulliPoly {
  int degree = 0;
  std::vector<Rat> coeffs;  // coefficient of X^j at index j

  Rat operator()(const Rat& t) const;
};

// B_n with B_1 = -1/2.
const Rat& bernoulli_number(int n);
BernoulliPoly bernoulli_polynomial(int n);
Rat bernoulli_value(int n, const Rat& t);

// t(t-1)...(t-n+1)/n!; 1 for n == 0, 0 for n < 0.
Rat formal_binomial(long t, long n);

}  // namespace eisp
