#include "cubic/verify.hpp"

#include <string>

namespace cubic {

namespace {

std::string fmt_case(long m, long p) {
  return "m=" + std::to_string(m) + " p=" + std::to_string(p);
}

// full beta scan with the closed-form classifier, optionally negated
std::vector<OrderTriple> scan_closed_form(const PrimeContext& ctx, int n,
                                          bool corrupt) {
  std::vector<OrderTriple> out;
  for (int i = 0; i <= n; ++i) {
    unsigned long pi = ctx.p_pow(i).get_ui();
    for (unsigned long b = 0; b < pi; ++b) {
      OrderTriple t = make_order_triple(ctx, i, n - i, mpz_class(b));
      if (classify_closed_form(t) != corrupt) out.push_back(std::move(t));
    }
  }
  return out;
}

bool same_triples(const std::vector<OrderTriple>& a,
                  const std::vector<OrderTriple>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!triple_equal(a[k], b[k])) return false;
  return true;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  for (long m : options.ms) {
    PureCubicField field = make_field(m);
    for (long p : options.ps) {
      PrimeContext ctx = make_prime_context(field, p);
      bool ok = true;
      std::string detail;
      std::size_t orders = 0;

      for (int n = 0; n <= options.n_max && ok; ++n) {
        ++report.cases;
        mpz_class formula = count_orders_formula(ctx, n);
        auto fast = enumerate_orders(ctx, n, EnumMethod::fast);
        if (formula != static_cast<unsigned long>(fast.size())) {
          ok = false;
          detail = "formula vs fast count mismatch at n=" + std::to_string(n);
          break;
        }
        orders += fast.size();

        if (n <= options.scan_max) {
          auto oracle = enumerate_orders(ctx, n, EnumMethod::oracle);
          auto valuation = enumerate_orders(ctx, n, EnumMethod::valuation);
          auto closed = scan_closed_form(ctx, n, options.corrupt_closed_form);
          if (!same_triples(oracle, valuation) ||
              !same_triples(oracle, closed) || !same_triples(oracle, fast)) {
            ok = false;
            detail = "classifier disagreement at n=" + std::to_string(n);
          } else if (formula != static_cast<unsigned long>(oracle.size())) {
            ok = false;
            detail = "formula vs scan count mismatch at n=" +
                     std::to_string(n);
          }
        } else {
          // beyond the scan cutoff, spot-check the classifiers on the
          // constructively enumerated triples
          for (const OrderTriple& t : fast)
            if (!is_closed_oracle(t) || !classify_valuation(t) ||
                (classify_closed_form(t) == options.corrupt_closed_form)) {
              ok = false;
              detail = "classifier rejects an enumerated order at n=" +
                       std::to_string(n);
              break;
            }
        }
      }

      std::string line = fmt_case(m, p) + ": classifier equivalence and " +
                         "formula-vs-scan for n <= " +
                         std::to_string(options.n_max);
      if (ok)
        line += ": PASS (" + std::to_string(orders) + " orders)";
      else
        line += ": FAIL (" + detail + ")";
      report.lines.emplace_back(ok, std::move(line));
      report.all_pass = report.all_pass && ok;
    }
  }
  return report;
}

}  // namespace cubic
