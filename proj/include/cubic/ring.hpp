#pragma once

#include <gmpxx.h>

#include <optional>

#include "cubic/field.hpp"

namespace cubic {

// Element of O_K in integer coordinates over the basis {1, X, Y}.
// Exact multiplication table: X^2 = kY, XY = YX = hk, Y^2 = hX.
struct RingElement {
  mpz_class c0, c1, c2;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement mul(const RingElement& a, const RingElement& b,
                const PureCubicField& f);

// Membership in the sublattice with Z-basis {1, d1*X, b21*X + d2*Y},
// d1, d2 > 0 and 0 <= b21 < d1:  d2 | c2 and d1 | (c1 - (c2/d2)*b21).
bool lattice_contains(const mpz_class& d1, const mpz_class& b21,
                      const mpz_class& d2, const RingElement& e);

// HNF lattice candidate of index p^(i+j), with preferred ordered basis
// {1, p^i X, beta X + p^j Y} and 0 <= beta < p^i.
struct OrderTriple {
  int i = 0;
  int j = 0;
  mpz_class beta;
  mpz_class pow_i;  // p^i
  mpz_class pow_j;  // p^j
  PrimeContext ctx;

  int n() const { return i + j; }
  mpz_class index() const { return pow_i * pow_j; }
};

OrderTriple make_order_triple(const PrimeContext& ctx, int i, int j,
                              mpz_class beta);

// canonical order: by (i, beta)
bool triple_less(const OrderTriple& a, const OrderTriple& b);
bool triple_equal(const OrderTriple& a, const OrderTriple& b);

bool in_order_lattice(const RingElement& e, const OrderTriple& t);

// Lower-triangular HNF of span{1, xi, xi^2}.  The span always contains 1,
// so the first row reduces to (1, 0, 0) and the lattice is determined by
// the remaining 2x2 block {d1, b21, d2}; index = d1 * d2.
struct GeneratedOrder {
  mpz_class index;
  mpz_class d1, b21, d2;

  // triple form when d1 and d2 are powers of ctx.p
  std::optional<OrderTriple> as_triple(const PrimeContext& ctx) const;
};

GeneratedOrder order_from_generator(const RingElement& xi,
                                    const PureCubicField& f);

}  // namespace cubic
