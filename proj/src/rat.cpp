#include "eisp/rat.hpp"

#include <stdexcept>

namespace eisp {

Rat make_rat(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Rat frac_part(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(fl);
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw std::domain_error("negative factorial");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace eisp
