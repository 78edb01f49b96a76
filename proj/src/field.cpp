#include "cubic/field.hpp"

#include <cstdlib>
#include <string>

#include "cubic/numeric.hpp"

namespace cubic {

std::pair<long, long> factor_cubefree(long m) {
  if (m >= -1 && m <= 1)
    fail(errc::degenerate_input,
         "m = " + std::to_string(m) + " does not define a cubic field");
  long h = m < 0 ? -1 : 1;
  long k = 1;
  long rest = std::labs(m);
  for (long q = 2; q <= rest / q; ++q) {
    if (rest % q != 0) continue;
    int e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e >= 3)
      fail(errc::not_cube_free, std::to_string(q) + "^3 divides m = " +
                                    std::to_string(m));
    if (e == 1)
      h *= q;
    else
      k *= q;
  }
  if (rest > 1) h *= rest;  // leftover prime factor, exponent 1
  return {h, k};
}

PureCubicField make_field(long m) {
  auto [h, k] = factor_cubefree(m);
  long r = (m % 9) * (m % 9) % 9;
  if (r == 1)
    fail(errc::unsupported_basis_case,
         "m^2 = 1 (mod 9): the basis {1, X, X^2/k} does not apply for m = " +
             std::to_string(m));
  return PureCubicField{m, h, k};
}

mpz_class PrimeContext::p_pow(long e) const {
  return pow_z(p, static_cast<unsigned long>(e));
}

PrimeContext make_prime_context(const PureCubicField& field, long p) {
  if (p == 2 || p == 3)
    fail(errc::bad_prime, "p = " + std::to_string(p) + " is excluded");
  if (!is_prime(p))
    fail(errc::bad_prime, "p = " + std::to_string(p) + " is not prime");
  PrimeContext ctx;
  ctx.field = field;
  ctx.p = p;
  ctx.vp_h = field.h % p == 0 ? 1 : 0;  // h square-free
  ctx.vp_k = field.k % p == 0 ? 1 : 0;  // k square-free
  return ctx;
}

}  // namespace cubic
