#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cubic/defaults.hpp"
#include "cubic/report.hpp"
#include "cubic/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;

void write_output(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(data.data(), 1, data.size(), stdout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file)
    cubic::fail(cubic::errc::bad_config, "cannot open " + out_path);
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
}

struct CommonOptions {
  long m = 0;
  long p = 0;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_prime = true) {
  cmd->add_option("--m", opt.m, "cube-free integer m of K = Q(cbrt(m))")
      ->required();
  if (needs_prime)
    cmd->add_option("--p", opt.p, "prime p != 2, 3")->required();
  cmd->add_option("--format", opt.format, "output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", opt.out, "write output to this file");
}

cubic::PrimeContext context_of(const CommonOptions& opt) {
  return cubic::make_prime_context(cubic::make_field(opt.m), opt.p);
}

cubic::OutputFormat format_of(const CommonOptions& opt) {
  auto f = cubic::format_from_name(opt.format);
  if (!f) cubic::fail(cubic::errc::bad_config, "unknown format " + opt.format);
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cubic-orders: orders of prime-power index in pure cubic fields "
      "Q(cbrt(m)) and their monogenicity, in exact arithmetic"};
  app.require_subcommand(1);

  CommonOptions count_opt;
  int count_n = 0;
  bool count_scan = false;
  int count_scan_max = cubic::kDefaultScanMax;
  auto* count = app.add_subcommand(
      "count", "count orders of index p^t for t = 0..n (formula, optional "
               "scan cross-check, cumulative A)");
  add_common(count, count_opt);
  count->add_option("--n", count_n, "largest exponent n")->required();
  count->add_flag("--verify-scan", count_scan,
                  "cross-check each count by enumeration");
  count->add_option("--scan-max", count_scan_max,
                    "largest n scanned with the closure oracle; beyond it "
                    "the fast enumerator is used");

  CommonOptions enum_opt;
  int enum_n = 0;
  std::string enum_method = "fast";
  auto* enumerate = app.add_subcommand(
      "enumerate", "list the orders of index p^n with their index forms");
  add_common(enumerate, enum_opt);
  enumerate->add_option("--n", enum_n, "exponent n")->required();
  enumerate->add_option("--method", enum_method,
                        "oracle, valuation, closed_form or fast")
      ->check(CLI::IsMember({"oracle", "valuation", "closed_form", "fast"}));

  CommonOptions mono_opt;
  int mono_n_max = 0;
  long mono_search = cubic::kDefaultSearchBound;
  long mono_tm_height = cubic::kDefaultTmHeight;
  int mono_tm_nmax = cubic::kDefaultTmNmax;
  auto* monogenic = app.add_subcommand(
      "monogenic", "bounded monogenicity census with the Thue-Mahler "
                   "solution linkage");
  add_common(monogenic, mono_opt);
  monogenic->add_option("--n-max", mono_n_max, "census up to index p^n-max")
      ->required();
  monogenic->add_option("--search-bound", mono_search,
                        "witness search box |x|, |y| <= bound");
  monogenic->add_option("--tm-height", mono_tm_height,
                        "solution box |U|, |V| <= height");
  monogenic->add_option("--tm-nmax", mono_tm_nmax,
                        "solution box exponent N <= nmax");

  CommonOptions tm_opt;
  long tm_height = cubic::kDefaultTmHeight;
  int tm_nmax = cubic::kDefaultTmNmax;
  auto* thue = app.add_subcommand(
      "thue-mahler",
      "dump primitive solutions of kU^3 - hV^3 = +-p^N in a box");
  add_common(thue, tm_opt);
  thue->add_option("--tm-height", tm_height, "box |U|, |V| <= height");
  thue->add_option("--tm-nmax", tm_nmax, "exponent bound N <= nmax");

  CommonOptions verify_opt;
  verify_opt.m = 0;  // optional here
  int verify_n_max = 5;
  int verify_scan_max = cubic::kDefaultScanMax;
  bool corrupt = false;
  auto* verify = app.add_subcommand(
      "verify", "run the classifier-equivalence and count cross-checks over "
                "a grid of fields");
  auto* verify_m =
      verify->add_option("--m", verify_opt.m, "restrict the grid to one m");
  auto* verify_p =
      verify->add_option("--p", verify_opt.p, "restrict the grid to one p");
  verify->add_option("--n-max", verify_n_max,
                     "largest exponent checked (negative: empty grid)");
  verify->add_option("--scan-max", verify_scan_max,
                     "largest n cross-checked by full beta scan");
  verify->add_option("--out", verify_opt.out, "write output to this file");
  verify->add_flag("--corrupt-classifier", corrupt,
                   "negate the closed-form classifier (harness self-test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (count->parsed()) {
      auto ctx = context_of(count_opt);
      std::optional<cubic::EnumMethod> scan;
      if (count_scan) scan = cubic::EnumMethod::oracle;
      std::vector<cubic::CountReport> rows;
      if (scan && count_n > count_scan_max) {
        // oracle scan up to the cutoff, constructive enumeration beyond
        rows = cubic::cumulative_counts(ctx, count_scan_max, scan);
        auto tail = cubic::cumulative_counts(ctx, count_n,
                                             cubic::EnumMethod::fast);
        rows.insert(rows.end(), tail.begin() + count_scan_max + 1, tail.end());
      } else {
        rows = cubic::cumulative_counts(ctx, count_n, scan);
      }
      write_output(
          cubic::render(cubic::count_report(ctx, rows), format_of(count_opt)),
          count_opt.out);
    } else if (enumerate->parsed()) {
      auto ctx = context_of(enum_opt);
      auto method = *cubic::method_from_name(enum_method);
      auto triples = cubic::enumerate_orders(ctx, enum_n, method);
      write_output(cubic::render(cubic::enumerate_report(ctx, enum_n, triples),
                                 format_of(enum_opt)),
                   enum_opt.out);
    } else if (monogenic->parsed()) {
      auto ctx = context_of(mono_opt);
      auto census = cubic::monogenic_census(ctx, mono_n_max, mono_search,
                                            mono_tm_height, mono_tm_nmax);
      write_output(
          cubic::render(cubic::monogenic_report(ctx, census, mono_search),
                        format_of(mono_opt)),
          mono_opt.out);
    } else if (thue->parsed()) {
      auto ctx = context_of(tm_opt);
      auto solutions = cubic::find_primitive_solutions(ctx, tm_height, tm_nmax);
      write_output(cubic::render(cubic::thue_report(ctx, solutions),
                                 format_of(tm_opt)),
                   tm_opt.out);
    } else if (verify->parsed()) {
      cubic::VerifyOptions options;
      if (*verify_m) options.ms = {verify_opt.m};
      if (*verify_p) options.ps = {verify_opt.p};
      if (verify_n_max < 0) {
        options.ms.clear();  // empty grid
        options.n_max = -1;
      } else {
        options.n_max = verify_n_max;
      }
      options.scan_max = verify_scan_max;
      options.corrupt_closed_form = corrupt;
      auto report = cubic::run_verify(options);
      std::string out;
      for (const auto& [pass, line] : report.lines)
        out += std::string(pass ? "PASS" : "FAIL") + "  " + line + "\n";
      if (report.cases == 0) out += "warning: no cases\n";
      out += report.all_pass ? "verify: all checks passed ("
                             : "verify: checks FAILED (";
      out += std::to_string(report.cases) + " cases)\n";
      write_output(out, verify_opt.out);
      if (!report.all_pass) return kExitInconsistent;
    }
  } catch (const cubic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cubic::is_internal(e.code()) ? kExitInconsistent : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}
