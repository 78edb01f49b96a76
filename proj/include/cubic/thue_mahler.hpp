#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic/index_form.hpp"
#include "cubic/order_enum.hpp"

namespace cubic {

// Primitive solution of F(U, V) = k U^3 - h V^3 = sign * p^N with
// gcd(U, V) = 1, canonically represented: V > 0, or V = 0 and U > 0.
struct PrimitiveSolution {
  mpz_class u, v;
  int n_exp = 0;  // N
  int sign = 1;

  friend bool operator==(const PrimitiveSolution&,
                         const PrimitiveSolution&) = default;
};

// canonical order: by (N, U, V)
bool solution_less(const PrimitiveSolution& a, const PrimitiveSolution& b);

// All canonical primitive solutions with |U|, |V| <= height and N <= n_max,
// by exhaustive box scan, deduplicated under (U,V) -> (-U,-V).  Sorted.
std::vector<PrimitiveSolution> find_primitive_solutions(const PrimeContext& ctx,
                                                        long height,
                                                        int n_max);

// The (a, b, N) shape of a primitive solution with U V != 0, writing
// U = p^a U', V = p^b V', (p, U'V') = 1:
//   (i)   (0, 0, 0)
//   (ii)  (a, 0, nu(h))  for a > 0
//   (iii) (0, b, nu(k))  for b > 0
//   (iv)  (0, 0, N)      for N > 0, only when p !| m
// Solutions with U = 0 or V = 0 sit in their own bucket since the p-free
// parametrization does not cover them.
enum class SolutionCase { case_i, case_ii, case_iii, case_iv, zero_coordinate };

const char* case_name(SolutionCase c);

struct SolutionClass {
  SolutionCase kase = SolutionCase::zero_coordinate;
  std::optional<long> a, b;  // nu(U), nu(V); empty for zero_coordinate
};

SolutionClass classify_solution(const PrimitiveSolution& s,
                                const PrimeContext& ctx);

// Orders of index p^n reachable from the solution family
// (p^(a+e) U', p^(b+e) V', N + 3e): those t = (i, j, beta) for which
//   y = p^(b+e-j) V'   and   x = p^(a+e-i) U' - p^(b+e-j-i) beta V'
// are both integers.  Empty unless n >= N and n = N (mod 3).
// Each returned (x, y) satisfies |I_t(x, y)| = 1.
struct LinkedWitness {
  OrderTriple t;
  mpz_class x, y;
};

std::vector<LinkedWitness> orders_from_solution(const PrimitiveSolution& s,
                                                const PrimeContext& ctx, int n);

// Census over n = 0..n_max: bounded monogenicity search over the fast
// enumeration, with every found monogenic order linked back to a canonical
// primitive solution.  A (solution, n) pair linking to 3 or more orders
// throws errc::multiplicity_violation.
struct CensusEntry {
  int n = 0;
  mpz_class orders_count;
  std::vector<std::pair<OrderTriple, std::pair<long, long>>>
      monogenic;                        // (order, witness)
  std::vector<PrimitiveSolution> links;  // parallel to monogenic
  mpz_class cumulative_a;
  mpz_class cumulative_b;
};

struct CensusResult {
  std::vector<CensusEntry> rows;
  std::vector<PrimitiveSolution> solutions_found;  // box scan; a lower
                                                   // bound g_found for g
  int max_linked_n_exp = -1;  // max N over linked solutions
};

CensusResult monogenic_census(const PrimeContext& ctx, int n_max,
                              long search_bound, long tm_height,
                              int tm_n_max);

}  // namespace cubic
