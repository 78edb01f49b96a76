#include "cubic/order_enum.hpp"

#include <algorithm>
#include <string>

#include "cubic/numeric.hpp"
#include "cubic/parallel.hpp"

namespace cubic {

namespace {

// scans over beta are Theta(sum p^i); keep them desk-scale
constexpr unsigned long kScanVolumeLimit = 1UL << 25;
constexpr unsigned long kMaterializeLimit = 1UL << 25;

mpq_class p_pow_q(long p, long e) {
  if (e >= 0) return mpq_class(pow_z(p, static_cast<unsigned long>(e)));
  mpq_class r(1, pow_z(p, static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

// sum_{t=0}^{top} p^t, i.e. (p^(top+1) - 1)/(p - 1); zero for top < 0
mpz_class geometric_p_sum(long p, long top) {
  if (top < 0) return 0;
  mpz_class num = pow_z(p, static_cast<unsigned long>(top + 1)) - 1;
  mpz_class q, r;
  mpz_class den(p - 1);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0)
    fail(errc::inconsistency, "geometric sum division left a remainder");
  return q;
}

bool accept(const OrderTriple& t, EnumMethod m) {
  switch (m) {
    case EnumMethod::oracle: return is_closed_oracle(t);
    case EnumMethod::valuation: return classify_valuation(t);
    case EnumMethod::closed_form: return classify_closed_form(t);
    case EnumMethod::fast: break;
  }
  throw std::invalid_argument("accept: not a scan method");
}

std::vector<OrderTriple> enumerate_scan(const PrimeContext& ctx, int n,
                                        EnumMethod method) {
  // volume guard
  mpz_class volume = 0;
  for (int i = 0; i <= n; ++i) volume += ctx.p_pow(i);
  if (volume > kScanVolumeLimit)
    fail(errc::bad_config,
         "beta scan over " + volume.get_str() +
             " candidates is out of desk scale; use the fast method");

  std::vector<OrderTriple> out;
  for (int i = 0; i <= n; ++i) {
    int j = n - i;
    unsigned long pi = ctx.p_pow(i).get_ui();
    auto part = parallel_chunks(pi, [&](std::size_t lo, std::size_t hi) {
      std::vector<OrderTriple> hits;
      for (std::size_t b = lo; b < hi; ++b) {
        OrderTriple t = make_order_triple(ctx, i, j,
                                          mpz_class(static_cast<unsigned long>(b)));
        if (accept(t, method)) hits.push_back(std::move(t));
      }
      return hits;
    });
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;  // built in (i, beta) order
}

std::vector<OrderTriple> enumerate_fast(const PrimeContext& ctx, int n) {
  if (count_orders_formula(ctx, n) > kMaterializeLimit)
    fail(errc::bad_config, "too many orders to materialize at n = " +
                               std::to_string(n));

  std::vector<OrderTriple> out;
  long a = ceil_div(n - ctx.vp_k, 3);
  long b = floor_div(2L * n + ctx.vp_h, 3);
  if (a < 0) a = 0;
  if (b > n) b = n;

  // beta = 0 or nu(beta) >= (n - nu(k))/3, for a <= i <= b:
  // the multiples of p^a below p^i
  for (long i = a; i <= b; ++i) {
    mpz_class step = ctx.p_pow(a);
    unsigned long count = ctx.p_pow(i - a).get_ui();
    for (unsigned long t = 0; t < count; ++t)
      out.push_back(make_order_triple(ctx, static_cast<int>(i),
                                      static_cast<int>(n - i), t * step));
  }

  if (!ctx.p_divides_m()) {
    // extra family: j < n/3, beta = alpha p^j with alpha a cube root of
    // m k^-3 mod p^(i-2j), extended freely through the last j digits
    for (int j = 0; 3 * j < n; ++j) {
      int i = n - j;
      int w = i - 2 * j;  // = n - 3j >= 1
      mpz_class pw = ctx.p_pow(w);
      mpz_class k3 = mpz_class(ctx.field.k) * ctx.field.k * ctx.field.k;
      mpz_class k3inv;
      mpz_invert(k3inv.get_mpz_t(), k3.get_mpz_t(), pw.get_mpz_t());
      mpz_class c = ctx.field.m * k3inv % pw;
      if (c < 0) c += pw;
      if (c == 0) fail(errc::inconsistency, "unit residue vanished");
      mpz_class pj = ctx.p_pow(j);
      unsigned long tails = pj.get_ui();
      for (const mpz_class& root : lift_cube_roots(c, ctx.p, w))
        for (unsigned long t = 0; t < tails; ++t) {
          mpz_class alpha = root + t * pw;
          out.push_back(make_order_triple(ctx, i, j, alpha * pj));
        }
    }
  }

  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

}  // namespace

const char* method_name(EnumMethod m) {
  switch (m) {
    case EnumMethod::oracle: return "oracle";
    case EnumMethod::valuation: return "valuation";
    case EnumMethod::closed_form: return "closed_form";
    case EnumMethod::fast: return "fast";
  }
  return "?";
}

std::optional<EnumMethod> method_from_name(const std::string& s) {
  if (s == "oracle") return EnumMethod::oracle;
  if (s == "valuation") return EnumMethod::valuation;
  if (s == "closed_form") return EnumMethod::closed_form;
  if (s == "fast") return EnumMethod::fast;
  return std::nullopt;
}

bool is_closed_oracle(const OrderTriple& t) {
  const PureCubicField& f = t.ctx.field;
  RingElement v2{0, t.pow_i, 0};
  RingElement v3{0, t.beta, t.pow_j};
  return in_order_lattice(mul(v2, v2, f), t) &&
         in_order_lattice(mul(v2, v3, f), t) &&
         in_order_lattice(mul(v3, v3, f), t);
}

bool classify_valuation(const OrderTriple& t) {
  long p = t.ctx.p;
  long i = t.i, j = t.j;
  mpz_class k(t.ctx.field.k), h(t.ctx.field.h);
  mpq_class q1 = mpq_class(k) * p_pow_q(p, 2 * i - j);
  mpq_class q2 = mpq_class(k * t.beta) * p_pow_q(p, i - j);
  mpq_class q3 = mpq_class(k * t.beta * t.beta) * p_pow_q(p, -j);
  mpq_class q4 = mpq_class(h) * p_pow_q(p, 2 * j - i) -
                 mpq_class(k * t.beta * t.beta * t.beta) * p_pow_q(p, -i - j);
  return nu(q1, p).at_least(0) && nu(q2, p).at_least(0) &&
         nu(q3, p).at_least(0) && nu(q4, p).at_least(0);
}

bool classify_closed_form(const OrderTriple& t) {
  const PrimeContext& ctx = t.ctx;
  long n = t.n();
  long i = t.i, j = t.j;

  // (pm cond): beta = 0 or nu(beta) >= (n - nu(k))/3, and
  // ceil((n - nu(k))/3) <= i <= floor((2n + nu(h))/3)
  bool in_range = ceil_div(n - ctx.vp_k, 3) <= i &&
                  i <= floor_div(2 * n + ctx.vp_h, 3);
  bool beta_ok =
      t.beta == 0 || 3 * nu(t.beta, ctx.p).value() >= n - ctx.vp_k;
  bool pm_cond = beta_ok && in_range;

  if (ctx.p_divides_m()) return pm_cond;
  if (pm_cond) return true;

  // extra family for p !| m
  if (t.beta == 0 || 3 * j >= n) return false;
  if (nu(t.beta, ctx.p) != Valuation(j)) return false;
  mpz_class alpha = t.beta / t.pow_j;
  mpz_class ka = ctx.field.k * alpha;
  mpz_class diff = ctx.field.m - ka * ka * ka;
  return nu(diff, ctx.p).at_least(i - 2 * j);
}

std::vector<OrderTriple> enumerate_orders(const PrimeContext& ctx, int n,
                                          EnumMethod method) {
  if (n < 0) throw std::invalid_argument("enumerate_orders: n < 0");
  if (method == EnumMethod::fast) return enumerate_fast(ctx, n);
  return enumerate_scan(ctx, n, method);
}

mpz_class count_orders_formula(const PrimeContext& ctx, int n) {
  if (n < 0) throw std::invalid_argument("count_orders_formula: n < 0");
  long p = ctx.p;
  if (ctx.p_divides_m()) return geometric_p_sum(p, floor_div(n, 3));
  long top = floor_div(2L * n, 3) - ceil_div(n, 3);
  int rp = count_cube_roots(mpz_class(ctx.field.m), p);
  return geometric_p_sum(p, top) +
         rp * geometric_p_sum(p, ceil_div(n, 3) - 1);
}

std::vector<CountReport> cumulative_counts(
    const PrimeContext& ctx, int n_max, std::optional<EnumMethod> scan_method) {
  std::vector<CountReport> rows;
  mpz_class cumulative = 0;
  for (int n = 0; n <= n_max; ++n) {
    CountReport r;
    r.n = n;
    r.by_formula = count_orders_formula(ctx, n);
    if (scan_method) {
      r.by_scan = mpz_class(enumerate_orders(ctx, n, *scan_method).size());
      if (*r.by_scan != r.by_formula)
        fail(errc::inconsistency,
             "count mismatch at n = " + std::to_string(n) + ": formula " +
                 r.by_formula.get_str() + " vs scan " + r.by_scan->get_str());
    }
    cumulative += r.by_formula;
    r.cumulative_a = cumulative;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace cubic
