#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubic/defaults.hpp"
#include "cubic/order_enum.hpp"

namespace cubic {

struct VerifyOptions {
  std::vector<long> ms{2, 3, 5, 6, 7, 11, 12};
  std::vector<long> ps{5, 7, 11};
  int n_max = 5;
  int scan_max = kDefaultScanMax;
  // test hook: negates the closed-form classifier so the harness itself
  // can be shown to catch a broken classifier
  bool corrupt_closed_form = false;
};

struct VerifyReport {
  std::vector<std::pair<bool, std::string>> lines;
  std::size_t cases = 0;
  bool all_pass = true;
};

// Runs the classifier equivalence (oracle = valuation = closed form = fast)
// and the formula-vs-scan count agreement over the configured grid.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace cubic
