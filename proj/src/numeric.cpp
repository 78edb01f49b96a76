#include "cubic/numeric.hpp"

namespace cubic {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long q = 3; q <= n / q; q += 2)
    if (n % q == 0) return false;
  return true;
}

mpz_class pow_z(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

long p_power_exponent(const mpz_class& x, long p) {
  mpz_class rest;
  mpz_class pz(static_cast<long>(p));
  long e = static_cast<long>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
  return rest == 1 ? e : -1;
}

}  // namespace cubic
