#include "cubic/index_form.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "cubic/numeric.hpp"

namespace cubic {

namespace {

// v * p^e, with a negative e demanding exact division
mpz_class shift_p(const mpz_class& v, const PrimeContext& ctx, long e,
                  const char* what) {
  if (e >= 0) return v * ctx.p_pow(e);
  mpz_class den = ctx.p_pow(-e);
  if (!mpz_divisible_p(v.get_mpz_t(), den.get_mpz_t()))
    fail(errc::not_an_order,
         std::string(what) + " coefficient is not an integer");
  return v / den;
}

constexpr long kSearchBoundLimit = 1L << 20;

using i128 = __int128;

}  // namespace

mpz_class BinaryCubicForm::eval(const mpz_class& x, const mpz_class& y) const {
  // ((a x + b y) x + c y^2) x + d y^3
  return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
}

BinaryCubicForm index_form_maximal(const PureCubicField& f) {
  return BinaryCubicForm{mpz_class(f.k), 0, 0, mpz_class(-f.h)};
}

BinaryCubicForm index_form_order(const OrderTriple& t) {
  const PrimeContext& ctx = t.ctx;
  long n = t.n();
  mpz_class k(ctx.field.k), h(ctx.field.h);
  BinaryCubicForm f;
  f.a = shift_p(k, ctx, 3L * t.i - n, "x^3");
  f.b = shift_p(3 * k * t.beta, ctx, 2L * t.i - n, "x^2 y");
  f.c = shift_p(3 * k * t.beta * t.beta, ctx, t.i - n, "x y^2");
  f.d = shift_p(k * t.beta * t.beta * t.beta - h * ctx.p_pow(3L * t.j), ctx,
                -n, "y^3");
  return f;
}

namespace {

bool fits_slong(const mpz_class& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

struct FastForm {
  long a, b, c, d;

  bool hit_unit(long x, long y) const {
    i128 v = ((i128(a) * x + i128(b) * y) * x + i128(c) * y * y) * x +
             i128(d) * y * y * y;
    return v == 1 || v == -1;
  }
};

}  // namespace

MonogenicityVerdict is_monogenic_bounded(const OrderTriple& t, long bound) {
  if (bound < 1 || bound > kSearchBoundLimit)
    fail(errc::bad_config,
         "search bound " + std::to_string(bound) + " out of range");
  BinaryCubicForm form = index_form_order(t);

  // 128-bit evaluation whenever |coef| * bound^3 * 4 stays far below 2^127
  bool fast = fits_slong(form.a) && fits_slong(form.b) &&
              fits_slong(form.c) && fits_slong(form.d) && bound <= 100000;
  FastForm ff{};
  if (fast)
    ff = FastForm{form.a.get_si(), form.b.get_si(), form.c.get_si(),
                  form.d.get_si()};

  MonogenicityVerdict verdict;
  verdict.search_bound = bound;

  mpz_class value, xz, yz;
  auto probe = [&](long x, long y) {
    if (fast) return ff.hit_unit(x, y);
    xz = x;
    yz = y;
    value = form.eval(xz, yz);
    return value == 1 || value == -1;
  };

  // balanced coordinate order 0, 1, -1, 2, -2, ...
  auto nth = [](long idx) {
    return idx % 2 ? (idx + 1) / 2 : -(idx / 2);
  };

  for (long r = 1; r <= bound; ++r) {
    for (long xi = 0; xi <= 2 * r; ++xi) {
      long x = nth(xi);
      if (std::labs(x) == r) {
        for (long yi = 0; yi <= 2 * r; ++yi) {
          long y = nth(yi);
          if (probe(x, y)) {
            verdict.status = MonogenicityVerdict::Status::monogenic_with_witness;
            verdict.witness = {x, y};
            return verdict;
          }
        }
      } else {
        for (long y : {r, -r}) {
          if (probe(x, y)) {
            verdict.status = MonogenicityVerdict::Status::monogenic_with_witness;
            verdict.witness = {x, y};
            return verdict;
          }
        }
      }
    }
  }
  return verdict;
}

RingElement witness_to_generator(const OrderTriple& t, long x, long y) {
  BinaryCubicForm form = index_form_order(t);
  mpz_class value = form.eval(mpz_class(x), mpz_class(y));
  if (value != 1 && value != -1)
    fail(errc::bad_witness, "|I(" + std::to_string(x) + ", " +
                                std::to_string(y) + ")| = " +
                                mpz_class(abs(value)).get_str() +
                                ", expected 1");
  return RingElement{0, x * t.pow_i + y * t.beta, y * t.pow_j};
}

}  // namespace cubic
