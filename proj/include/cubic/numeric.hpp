#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace cubic {

// floor/ceil division for b > 0 (C++ '/' truncates toward zero)
constexpr long floor_div(long a, long b) {
  long q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr long ceil_div(long a, long b) {
  long q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

// trial division; inputs are desk-scale
bool is_prime(long n);

// base^e for base > 0
mpz_class pow_z(long base, unsigned long e);

// exponent e with x == p^e (e >= 0), or -1 if x is not a power of p; x > 0
long p_power_exponent(const mpz_class& x, long p);

}  // namespace cubic
