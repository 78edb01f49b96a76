#include "cubic/padic.hpp"

#include <algorithm>
#include <string>

#include "cubic/numeric.hpp"

namespace cubic {

namespace {

void check_prime(long p) {
  if (p == 2 || p == 3)
    fail(errc::bad_prime, "p = " + std::to_string(p) + " is excluded");
  if (!is_prime(p))
    fail(errc::bad_prime, "p = " + std::to_string(p) + " is not prime");
}

// desk-scale guard for the O(p) root scan
constexpr long kMaxScanPrime = 1LL << 24;

}  // namespace

Valuation nu(const mpz_class& x, long p) {
  if (x == 0) return Valuation::infinite();
  mpz_class rest, pz(static_cast<long>(p));
  long e = static_cast<long>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
  return Valuation(e);
}

Valuation nu(const mpz_class& num, const mpz_class& den, long p) {
  if (den == 0) throw std::invalid_argument("nu: zero denominator");
  return nu(num, p) - nu(den, p);
}

Valuation nu(const mpq_class& x, long p) {
  return nu(x.get_num(), p) - nu(x.get_den(), p);
}

int count_cube_roots(const mpz_class& m, long p) {
  check_prime(p);
  mpz_class pz(static_cast<long>(p));
  mpz_class r = m % pz;
  if (r < 0) r += pz;
  if (r == 0) return 1;       // x^3 = 0 has the single root 0
  if (p % 3 == 2) return 1;   // cubing is a bijection on F_p
  mpz_class t, e((p - 1) / 3);
  mpz_powm(t.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
  return t == 1 ? 3 : 0;
}

std::vector<long> cube_roots_mod_p(const mpz_class& c, long p) {
  check_prime(p);
  mpz_class pz(static_cast<long>(p));
  mpz_class r = c % pz;
  if (r < 0) r += pz;
  if (r == 0) return {0};
  if (p % 3 == 2) {
    // unique root c^d with 3d = 1 (mod p-1)
    mpz_class d, three(3), order(static_cast<long>(p - 1));
    mpz_invert(d.get_mpz_t(), three.get_mpz_t(), order.get_mpz_t());
    mpz_class root;
    mpz_powm(root.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
    return {static_cast<long>(root.get_si())};
  }
  if (p > kMaxScanPrime)
    fail(errc::bad_config,
         "cube-root scan not supported for p = " + std::to_string(p));
  long target = r.get_si();
  std::vector<long> roots;
  for (long x = 0; x < p; ++x) {
    unsigned __int128 sq = static_cast<unsigned __int128>(x) * x % p;
    if (static_cast<long>(sq * x % p) == target) roots.push_back(x);
  }
  return roots;
}

std::vector<mpz_class> lift_cube_roots(const mpz_class& c, long p,
                                       int e) {
  check_prime(p);
  if (e < 1) throw std::invalid_argument("lift_cube_roots: e must be >= 1");
  if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)))
    fail(errc::not_coprime, "p = " + std::to_string(p) + " divides c");

  mpz_class pz(static_cast<long>(p));
  std::vector<mpz_class> roots;
  for (long r0 : cube_roots_mod_p(c, p)) roots.emplace_back(r0);

  // digit-by-digit Newton step: r <- r + s p^t with
  // s = (c - r^3)/p^t * (3 r^2)^-1 (mod p)
  mpz_class pk(1);
  for (int t = 1; t < e; ++t) {
    pk *= pz;
    for (auto& r : roots) {
      mpz_class residual = (c - r * r * r) / pk;
      mpz_class deriv = 3 * r * r % pz;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), pz.get_mpz_t());
      mpz_class s = residual * inv % pz;
      if (s < 0) s += pz;
      r += s * pk;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cubic
