#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>

#include "cubic/ring.hpp"

namespace cubic {

// Binary cubic form A x^3 + B x^2 y + C x y^2 + D y^3 with integer
// coefficients.
struct BinaryCubicForm {
  mpz_class a, b, c, d;

  mpz_class eval(const mpz_class& x, const mpz_class& y) const;

  friend bool operator==(const BinaryCubicForm&,
                         const BinaryCubicForm&) = default;
};

// Index form of O_K with respect to {1, X, Y}: k x^3 - h y^3.
BinaryCubicForm index_form_maximal(const PureCubicField& f);

// Index form of the order with basis {1, p^i X, beta X + p^j Y}:
//   (1/p^n) * (k (p^i x + beta y)^3 - h (p^j y)^3)
// with coefficients
//   A = k p^(3i-n), B = 3 k p^(2i-n) beta, C = 3 k p^(i-n) beta^2,
//   D = (k beta^3 - h p^(3j)) / p^n.
// Integrality of all four is asserted; failure means t is not an order.
BinaryCubicForm index_form_order(const OrderTriple& t);

struct MonogenicityVerdict {
  enum class Status { monogenic_with_witness, unknown };

  Status status = Status::unknown;
  std::optional<std::pair<long, long>> witness;
  long search_bound = 0;

  bool monogenic() const { return status == Status::monogenic_with_witness; }
};

// Scans |x|, |y| <= bound for |I(x, y)| = 1 in the canonical order:
// increasing max(|x|, |y|), then x before y, each coordinate running
// 0, 1, -1, 2, -2, ...  Bounded search cannot prove non-monogenicity, so
// the negative outcome is 'unknown', never 'no'.
MonogenicityVerdict is_monogenic_bounded(const OrderTriple& t,
                                         long bound);

// xi = x * (p^i X) + y * (beta X + p^j Y), the generator named by a
// witness; order_from_generator(xi) reproduces t's lattice and index.
RingElement witness_to_generator(const OrderTriple& t, long x,
                                 long y);

}  // namespace cubic
