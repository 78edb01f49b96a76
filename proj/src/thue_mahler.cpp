#include "cubic/thue_mahler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "cubic/numeric.hpp"
#include "cubic/parallel.hpp"

namespace cubic {

namespace {

mpz_class form_value(const PrimeContext& ctx, const mpz_class& u,
                     const mpz_class& v) {
  return ctx.field.k * u * u * u - ctx.field.h * v * v * v;
}

void check_solution(const PrimitiveSolution& s, const PrimeContext& ctx) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s.u.get_mpz_t(), s.v.get_mpz_t());
  bool canonical = s.v > 0 || (s.v == 0 && s.u > 0);
  if (g != 1 || !canonical || (s.sign != 1 && s.sign != -1) || s.n_exp < 0 ||
      form_value(ctx, s.u, s.v) != s.sign * ctx.p_pow(s.n_exp))
    throw std::invalid_argument("not a canonical primitive solution");
}

constexpr long kHeightLimit = 1L << 20;

}  // namespace

bool solution_less(const PrimitiveSolution& a, const PrimitiveSolution& b) {
  if (a.n_exp != b.n_exp) return a.n_exp < b.n_exp;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

std::vector<PrimitiveSolution> find_primitive_solutions(const PrimeContext& ctx,
                                                        long height,
                                                        int n_max) {
  if (height < 0 || height > kHeightLimit)
    fail(errc::bad_config,
         "solution box height " + std::to_string(height) + " out of range");
  if (n_max < 0) throw std::invalid_argument("n_max < 0");

  // scan only the canonical representatives: v > 0, or v = 0 and u > 0
  auto rows = parallel_chunks(
      static_cast<std::size_t>(height) + 1,
      [&](std::size_t lo, std::size_t hi) {
        std::vector<PrimitiveSolution> hits;
        mpz_class uz, vz, val;
        for (std::size_t vv = lo; vv < hi; ++vv) {
          long v = static_cast<long>(vv);
          long u_lo = v == 0 ? 1 : -height;
          for (long u = u_lo; u <= height; ++u) {
            if (std::gcd(u, v) != 1) continue;
            uz = u;
            vz = v;
            val = form_value(ctx, uz, vz);
            if (val == 0) continue;
            int sign = val < 0 ? -1 : 1;
            long e = p_power_exponent(abs(val), ctx.p);
            if (e < 0 || e > n_max) continue;
            hits.push_back(
                PrimitiveSolution{uz, vz, static_cast<int>(e), sign});
          }
        }
        return hits;
      });
  std::sort(rows.begin(), rows.end(), solution_less);
  return rows;
}

const char* case_name(SolutionCase c) {
  switch (c) {
    case SolutionCase::case_i: return "i";
    case SolutionCase::case_ii: return "ii";
    case SolutionCase::case_iii: return "iii";
    case SolutionCase::case_iv: return "iv";
    case SolutionCase::zero_coordinate: return "zero_coordinate";
  }
  return "?";
}

SolutionClass classify_solution(const PrimitiveSolution& s,
                                const PrimeContext& ctx) {
  check_solution(s, ctx);
  if (s.u == 0 || s.v == 0)
    return SolutionClass{SolutionCase::zero_coordinate, {}, {}};

  long a = nu(s.u, ctx.p).value();
  long b = nu(s.v, ctx.p).value();
  SolutionClass out;
  out.a = a;
  out.b = b;
  if (a == 0 && b == 0 && s.n_exp == 0)
    out.kase = SolutionCase::case_i;
  else if (a > 0 && b == 0 && s.n_exp == ctx.vp_h)
    out.kase = SolutionCase::case_ii;
  else if (a == 0 && b > 0 && s.n_exp == ctx.vp_k)
    out.kase = SolutionCase::case_iii;
  else if (a == 0 && b == 0 && s.n_exp > 0 && !ctx.p_divides_m())
    out.kase = SolutionCase::case_iv;
  else
    fail(errc::classification_gap,
         "(a, b, N) = (" + std::to_string(a) + ", " + std::to_string(b) +
             ", " + std::to_string(s.n_exp) + ") matches no case");
  return out;
}

namespace {

// v * p^e when that is an integer
std::optional<mpz_class> integral_shift(const mpz_class& v,
                                        const PrimeContext& ctx, long e) {
  if (v == 0) return mpz_class(0);
  if (e >= 0) return mpz_class(v * ctx.p_pow(e));
  mpz_class den = ctx.p_pow(-e);
  if (!mpz_divisible_p(v.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
  return mpz_class(v / den);
}

}  // namespace

std::vector<LinkedWitness> orders_from_solution(const PrimitiveSolution& s,
                                                const PrimeContext& ctx,
                                                int n) {
  check_solution(s, ctx);
  if (n < s.n_exp || (n - s.n_exp) % 3 != 0) return {};
  long e = (n - s.n_exp) / 3;

  std::vector<LinkedWitness> out;
  for (OrderTriple& t : enumerate_orders(ctx, n, EnumMethod::fast)) {
    // y = V p^(e-j),  x = (U p^j - beta V) / p^(i+j-e)
    auto y = integral_shift(s.v, ctx, e - t.j);
    if (!y) continue;
    auto x = integral_shift(s.u * t.pow_j - t.beta * s.v, ctx,
                            e - t.i - t.j);
    if (!x) continue;
    mpz_class unit = index_form_order(t).eval(*x, *y);
    if (unit != 1 && unit != -1)
      fail(errc::inconsistency,
           "linked point is not a unit value of the index form");
    out.push_back(LinkedWitness{std::move(t), std::move(*x), std::move(*y)});
  }
  return out;
}

CensusResult monogenic_census(const PrimeContext& ctx, int n_max,
                              long search_bound, long tm_height,
                              int tm_n_max) {
  CensusResult result;
  result.solutions_found =
      find_primitive_solutions(ctx, tm_height, tm_n_max);

  mpz_class cumulative_a = 0, cumulative_b = 0;
  std::vector<std::map<int, int>> multiplicity;  // per entry: links at n

  for (int n = 0; n <= n_max; ++n) {
    auto triples = enumerate_orders(ctx, n, EnumMethod::fast);
    mpz_class formula = count_orders_formula(ctx, n);
    if (formula != static_cast<unsigned long>(triples.size()))
      fail(errc::inconsistency, "fast enumeration disagrees with the count "
                                "formula at n = " + std::to_string(n));

    auto verdicts = parallel_map(triples.size(), [&](std::size_t idx) {
      return is_monogenic_bounded(triples[idx], search_bound);
    });

    CensusEntry entry;
    entry.n = n;
    entry.orders_count = formula;
    std::map<std::pair<std::pair<mpz_class, mpz_class>, std::pair<int, int>>,
             int>
        links_at_n;

    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
      if (!verdicts[idx].monogenic()) continue;
      const OrderTriple& t = triples[idx];
      auto [x, y] = *verdicts[idx].witness;

      // (U, V) = (p^i x + beta y, p^j y); the shared factor must be a
      // p-power p^e, and stripping it leaves a primitive solution with
      // N = n - 3e
      mpz_class u = x * t.pow_i + y * t.beta;
      mpz_class v = mpz_class(y) * t.pow_j;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      long e = p_power_exponent(g, ctx.p);
      if (e < 0)
        fail(errc::inconsistency, "witness gcd " + g.get_str() +
                                      " is not a power of p");
      PrimitiveSolution sol;
      sol.u = u / g;
      sol.v = v / g;
      if (sol.v < 0 || (sol.v == 0 && sol.u < 0)) {
        sol.u = -sol.u;
        sol.v = -sol.v;
      }
      mpz_class val = form_value(ctx, sol.u, sol.v);
      sol.sign = val < 0 ? -1 : 1;
      long n_exp = p_power_exponent(abs(val), ctx.p);
      if (n_exp < 0 || n_exp + 3 * e != n)
        fail(errc::inconsistency,
             "stripped witness does not solve F = +-p^N with n = N + 3e");
      sol.n_exp = static_cast<int>(n_exp);

      if (sol.n_exp <= tm_n_max && abs(sol.u) <= tm_height &&
          abs(sol.v) <= tm_height &&
          !std::binary_search(result.solutions_found.begin(),
                              result.solutions_found.end(), sol,
                              solution_less))
        fail(errc::inconsistency,
             "linked solution missing from the box scan");

      auto key = std::make_pair(std::make_pair(sol.u, sol.v),
                                std::make_pair(sol.n_exp, sol.sign));
      if (++links_at_n[key] > 2)
        fail(errc::multiplicity_violation,
             "a primitive solution links to 3 orders at n = " +
                 std::to_string(n));

      result.max_linked_n_exp = std::max(result.max_linked_n_exp, sol.n_exp);
      entry.monogenic.emplace_back(t, std::make_pair(x, y));
      entry.links.push_back(std::move(sol));
    }

    cumulative_a += formula;
    cumulative_b += static_cast<unsigned long>(entry.monogenic.size());
    entry.cumulative_a = cumulative_a;
    entry.cumulative_b = cumulative_b;
    result.rows.push_back(std::move(entry));
  }

  // past the largest linked N, the per-n monogenic count is capped by
  // twice the distinct linked solutions at that n
  for (const CensusEntry& entry : result.rows) {
    if (entry.n <= result.max_linked_n_exp) continue;
    std::set<std::pair<std::pair<mpz_class, mpz_class>, std::pair<int, int>>>
        distinct;
    for (const PrimitiveSolution& s : entry.links)
      distinct.insert({{s.u, s.v}, {s.n_exp, s.sign}});
    if (entry.monogenic.size() > 2 * distinct.size())
      fail(errc::multiplicity_violation,
           "monogenic count exceeds twice the linked solutions at n = " +
               std::to_string(entry.n));
  }
  return result;
}

}  // namespace cubic
