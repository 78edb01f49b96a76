#pragma once

#include <gmpxx.h>

#include <utility>

#include "cubic/errors.hpp"

namespace cubic {

// Pure cubic field K = Q(cbrt(m)) for a cube-free integer m, restricted to
// the case m^2 mod 9 != 1, where an integral basis is {1, X, Y} with
// X = cbrt(m) and Y = X^2 / k.  Here m = h k^2 with h, k square-free,
// gcd(h, k) = 1 and k > 0; a negative m puts its sign into h.
struct PureCubicField {
  long m = 0;
  long h = 0;
  long k = 1;
};

// Splits a cube-free m as m = h k^2 (h, k square-free and coprime, k > 0).
std::pair<long, long> factor_cubefree(long m);

PureCubicField make_field(long m);

// A fixed prime p != 2, 3 together with the field it acts on.
struct PrimeContext {
  PureCubicField field;
  long p = 0;
  int vp_h = 0;  // nu_p(h), 0 or 1
  int vp_k = 0;  // nu_p(k), 0 or 1

  bool p_divides_m() const { return vp_h + vp_k > 0; }
  mpz_class p_pow(long e) const;  // p^e, e >= 0
};

PrimeContext make_prime_context(const PureCubicField& field, long p);

}  // namespace cubic
