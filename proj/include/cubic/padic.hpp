#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "cubic/errors.hpp"

namespace cubic {

// Value of a p-adic valuation: a finite integer, or +infinity for nu(0).
// The infinity is an explicit state so comparisons stay total and exact.
class Valuation {
 public:
  constexpr Valuation() = default;
  explicit constexpr Valuation(long v) : v_(v) {}

  static constexpr Valuation infinite() {
    Valuation v;
    v.inf_ = true;
    return v;
  }

  bool is_infinite() const { return inf_; }

  long value() const {
    if (inf_) throw std::logic_error("Valuation::value on +infinity");
    return v_;
  }

  bool at_least(long bound) const { return inf_ || v_ >= bound; }

  Valuation operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinite();
    return Valuation(v_ + o.v_);
  }

  Valuation operator-(const Valuation& o) const {
    // only used as nu(num) - nu(den) with finite denominator valuation
    if (o.inf_) throw std::logic_error("Valuation: subtracting +infinity");
    if (inf_) return infinite();
    return Valuation(v_ - o.v_);
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) {
    return !(a == b);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) {
    return !(b < a);
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) {
    return !(a < b);
  }

  friend Valuation min(const Valuation& a, const Valuation& b) {
    return a < b ? a : b;
  }

 private:
  long v_ = 0;
  bool inf_ = false;
};

// nu_p, normalized as nu(p) = 1; nu(0) = +infinity.
Valuation nu(const mpz_class& x, long p);
Valuation nu(const mpz_class& num, const mpz_class& den, long p);
Valuation nu(const mpq_class& x, long p);

// r_p: the number of roots of X^3 - m = 0 in Z/pZ, by the closed form
//   0 if p = 1 mod 3 and m^((p-1)/3) != 1 mod p,
//   1 if p = 2 mod 3 or p | m,
//   3 if p = 1 mod 3 and m^((p-1)/3) = 1 mod p.
int count_cube_roots(const mpz_class& m, long p);

// all x in [0, p) with x^3 = c (mod p)
std::vector<long> cube_roots_mod_p(const mpz_class& c, long p);

// the residues alpha mod p^e with alpha^3 = c (mod p^e), for gcd(c, p) = 1.
// Each root mod p lifts uniquely (the derivative 3 alpha^2 is a p-unit), so
// the result has exactly count_cube_roots(c, p) elements.  Sorted.
std::vector<mpz_class> lift_cube_roots(const mpz_class& c, long p, int e);

}  // namespace cubic
