#pragma once

#include <gmpxx.h>

#include <string>

namespace eisp {

using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long p, long q = 1);

// "p/q" or "p" (q == 1); always fully reduced.
std::string to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// Reduce into [0, 1).
Rat frac_part(const Rat& x);

bool is_integer(const Rat& x);

Int binomial(long n, long k);
Int factorial(long n);

// Non-negative residue of a mod n.
long mod(long a, long n);

}  // namespace eisp
