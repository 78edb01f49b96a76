#pragma once

#include <optional>
#include <vector>

#include "cubic/padic.hpp"
#include "cubic/ring.hpp"

namespace cubic {

enum class EnumMethod { oracle, valuation, closed_form, fast };

const char* method_name(EnumMethod m);
std::optional<EnumMethod> method_from_name(const std::string& s);

// Ground truth: the three products (p^i X)^2, (p^i X)(beta X + p^j Y) and
// (beta X + p^j Y)^2 all lie back in the lattice.
bool is_closed_oracle(const OrderTriple& t);

// Equivalent condition: the four rationals
//   k p^(2i-j),  k p^(i-j) beta,  k p^(-j) beta^2,
//   h p^(2j-i) - k p^(-i-j) beta^3
// all have nonnegative p-adic valuation.
bool classify_valuation(const OrderTriple& t);

// Closed-form condition.  With n = i + j and a zero beta handled first:
//   p | m:   (beta = 0 or nu(beta) >= (n - nu(k))/3)
//            and ceil((n - nu(k))/3) <= i <= floor((2n + nu(h))/3)
//   p !| m:  the same with nu(h) = nu(k) = 0, or the extra family
//            beta != 0, j < n/3, nu(beta) = j,
//            nu(m - (k a)^3) >= i - 2j  where a = beta / p^j.
bool classify_closed_form(const OrderTriple& t);

// All triples (i, j, beta) with i + j = n, 0 <= beta < p^i, accepted by the
// chosen classifier; 'fast' constructs the accepted beta directly (zero
// cases, multiples of p^ceil((n - nu(k))/3), Hensel lifts of cube roots of
// m k^-3 for the extra family) without scanning.  Sorted by (i, beta).
std::vector<OrderTriple> enumerate_orders(const PrimeContext& ctx, int n,
                                          EnumMethod method);

// |M_{p^n,K}|:
//   p | m:   (p^(floor(n/3)+1) - 1) / (p - 1)
//   p !| m:  (p^(floor(2n/3)-ceil(n/3)+1) - 1)/(p - 1)
//            + r_p (p^ceil(n/3) - 1)/(p - 1)
mpz_class count_orders_formula(const PrimeContext& ctx, int n);

struct CountReport {
  int n = 0;
  mpz_class by_formula;
  std::optional<mpz_class> by_scan;
  mpz_class cumulative_a;  // A_{K,p,n} = sum over t <= n
};

// Per-n reports for n = 0..n_max.  When scan_method is given, each row is
// cross-checked against the enumeration count; a mismatch throws
// errc::inconsistency.
std::vector<CountReport> cumulative_counts(
    const PrimeContext& ctx, int n_max,
    std::optional<EnumMethod> scan_method = std::nullopt);

}  // namespace cubic
