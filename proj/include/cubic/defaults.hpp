#pragma once

namespace cubic {

// Scans over all beta (oracle/valuation/closed_form) cost Theta(sum p^i);
// the fast enumerator and the closed formula serve larger n.
inline constexpr int kDefaultScanMax = 6;

// Witness search box for is_monogenic_bounded.
inline constexpr long kDefaultSearchBound = 50;

// Thue-Mahler box scan: |U|, |V| <= height, N <= n_max.
inline constexpr long kDefaultTmHeight = 200;
inline constexpr int kDefaultTmNmax = 12;

}  // namespace cubic
