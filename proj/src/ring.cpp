#include "cubic/ring.hpp"

#include <array>
#include <string>

#include "cubic/numeric.hpp"

namespace cubic {

RingElement mul(const RingElement& a, const RingElement& b,
                const PureCubicField& f) {
  // X^2 = kY, XY = YX = hk (theta * theta^2/k = m/k), Y^2 = hX
  mpz_class hk = mpz_class(f.h) * f.k;
  RingElement r;
  r.c0 = a.c0 * b.c0 + hk * (a.c1 * b.c2 + a.c2 * b.c1);
  r.c1 = a.c0 * b.c1 + a.c1 * b.c0 + f.h * a.c2 * b.c2;
  r.c2 = a.c0 * b.c2 + a.c2 * b.c0 + f.k * a.c1 * b.c1;
  return r;
}

bool lattice_contains(const mpz_class& d1, const mpz_class& b21,
                      const mpz_class& d2, const RingElement& e) {
  // c0 is unconstrained: 1 is a basis vector of every candidate lattice
  if (!mpz_divisible_p(e.c2.get_mpz_t(), d2.get_mpz_t())) return false;
  mpz_class t = e.c2 / d2;
  mpz_class rem = e.c1 - t * b21;
  return mpz_divisible_p(rem.get_mpz_t(), d1.get_mpz_t());
}

OrderTriple make_order_triple(const PrimeContext& ctx, int i, int j,
                              mpz_class beta) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("order triple: negative exponent");
  OrderTriple t;
  t.i = i;
  t.j = j;
  t.pow_i = ctx.p_pow(i);
  t.pow_j = ctx.p_pow(j);
  t.beta = std::move(beta);
  t.ctx = ctx;
  if (t.beta < 0 || t.beta >= t.pow_i)
    throw std::invalid_argument("order triple: beta out of [0, p^i)");
  return t;
}

bool triple_less(const OrderTriple& a, const OrderTriple& b) {
  if (a.i != b.i) return a.i < b.i;
  return a.beta < b.beta;
}

bool triple_equal(const OrderTriple& a, const OrderTriple& b) {
  return a.i == b.i && a.j == b.j && a.beta == b.beta;
}

bool in_order_lattice(const RingElement& e, const OrderTriple& t) {
  return lattice_contains(t.pow_i, t.beta, t.pow_j, e);
}

namespace {

using Mat3 = std::array<std::array<mpz_class, 3>, 3>;

// Row HNF with the lower-triangular convention: positive diagonal, entries
// below a pivot reduced into [0, pivot).  Throws on rank deficiency.
void hnf3_lower(Mat3& r) {
  for (int col = 2; col >= 0; --col) {
    // gcd-eliminate column col among rows 0..col, pivot ends at row col
    for (;;) {
      int best = -1, nonzero = 0;
      for (int s = 0; s <= col; ++s) {
        if (r[s][col] == 0) continue;
        ++nonzero;
        if (best < 0 ||
            mpz_cmpabs(r[s][col].get_mpz_t(), r[best][col].get_mpz_t()) < 0)
          best = s;
      }
      if (nonzero == 0)
        fail(errc::not_full_rank, "generators span a rank-deficient module");
      if (nonzero == 1) {
        std::swap(r[best], r[col]);
        break;
      }
      for (int s = 0; s <= col; ++s) {
        if (s == best || r[s][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r[s][col].get_mpz_t(),
                   r[best][col].get_mpz_t());
        for (int c = 0; c <= col; ++c) r[s][c] -= q * r[best][c];
      }
    }
    if (r[col][col] < 0)
      for (auto& v : r[col]) v = -v;
  }
  // reduce below-diagonal entries; row j has zeros right of column j, so
  // this never disturbs columns already settled
  for (int i = 1; i < 3; ++i)
    for (int j = i - 1; j >= 0; --j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), r[i][j].get_mpz_t(), r[j][j].get_mpz_t());
      if (q != 0)
        for (int c = 0; c <= j; ++c) r[i][c] -= q * r[j][c];
    }
}

}  // namespace

GeneratedOrder order_from_generator(const RingElement& xi,
                                    const PureCubicField& f) {
  RingElement xi2 = mul(xi, xi, f);
  Mat3 rows{{{mpz_class(1), mpz_class(0), mpz_class(0)},
             {xi.c0, xi.c1, xi.c2},
             {xi2.c0, xi2.c1, xi2.c2}}};
  hnf3_lower(rows);
  // the span contains 1, so the first pivot is 1 and column 0 clears
  if (rows[0][0] != 1 || rows[1][0] != 0 || rows[2][0] != 0)
    fail(errc::inconsistency, "HNF of a unital lattice lost the 1-row");
  GeneratedOrder g;
  g.d1 = rows[1][1];
  g.b21 = rows[2][1];
  g.d2 = rows[2][2];
  g.index = g.d1 * g.d2;
  return g;
}

std::optional<OrderTriple> GeneratedOrder::as_triple(
    const PrimeContext& ctx) const {
  long i = p_power_exponent(d1, ctx.p);
  long j = p_power_exponent(d2, ctx.p);
  if (i < 0 || j < 0) return std::nullopt;
  return make_order_triple(ctx, static_cast<int>(i), static_cast<int>(j), b21);
}

}  // namespace cubic
