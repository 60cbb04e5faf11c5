#pragma once

#include <algorithm>
#include <vector>

#include "mms/rational.hpp"

// Test-only second implementation of the maximin share: full enumeration of
// every assignment of goods to d parts. Independent of the branch-and-bound
// path it cross-checks. Only sane for |subset| <= ~10.
inline mms::Rational naive_mms(const std::vector<mms::Rational>& row, int d,
                               const std::vector<int>& subset) {
  size_t n = subset.size();
  if (d == 1) {
    mms::Rational total = 0;
    for (int g : subset) total += row[g];
    return total;
  }
  std::vector<int> assign(n, 0);
  mms::Rational best = 0;
  bool first = true;
  while (true) {
    std::vector<mms::Rational> sums(d, mms::Rational(0));
    for (size_t i = 0; i < n; ++i) sums[assign[i]] += row[subset[i]];
    mms::Rational mn = *std::min_element(sums.begin(), sums.end());
    if (first || mn > best) {
      best = mn;
      first = false;
    }
    size_t i = 0;
    while (i < n && assign[i] == d - 1) assign[i++] = 0;
    if (i == n) break;
    ++assign[i];
  }
  return best;
}

inline mms::Rational naive_mms(const std::vector<mms::Rational>& row, int d) {
  std::vector<int> all(row.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return naive_mms(row, d, all);
}
