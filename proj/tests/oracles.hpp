#pragma once

// Slow but independent re-implementations used only by tests. Each one
// deliberately avoids the algorithm used by the library so that agreement is
// meaningful: section counts come from truncated power-series division instead
// of binomial sums, binomials from Pascal's triangle instead of the
// multiplicative formula, and sum/product tuples from unpruned recursion.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cicover/bigint.hpp"
#include "cicover/ci.hpp"

namespace oracles {

// Coefficients 0..len-1 of prod_i (1 - t^{d_i}) / (1 - t)^{N+1}: multiply out
// the numerator by plain convolution, then divide by (1 - t) a total of N+1
// times; each division is a running prefix sum of the truncated series.
inline std::vector<cicover::Int> series_h0_prefix(int N,
                                                  const std::vector<int>& degrees,
                                                  int len) {
  std::vector<cicover::Int> coeff(static_cast<size_t>(len), 0);
  if (len <= 0) return coeff;
  coeff[0] = 1;
  for (int d : degrees) {
    std::vector<cicover::Int> next(static_cast<size_t>(len), 0);
    for (int j = 0; j < len; ++j) {
      if (coeff[static_cast<size_t>(j)] == 0) continue;
      next[static_cast<size_t>(j)] += coeff[static_cast<size_t>(j)];
      if (j + d < len) next[static_cast<size_t>(j + d)] -= coeff[static_cast<size_t>(j)];
    }
    coeff = std::move(next);
  }
  for (int pass = 0; pass <= N; ++pass) {
    for (int j = 1; j < len; ++j) {
      coeff[static_cast<size_t>(j)] += coeff[static_cast<size_t>(j - 1)];
    }
  }
  return coeff;
}

inline cicover::Int series_h0(const cicover::CompleteIntersection& ci, long long a) {
  if (a < 0) return 0;
  auto coeff = series_h0_prefix(ci.N, ci.degrees, static_cast<int>(a) + 1);
  return coeff[static_cast<size_t>(a)];
}

inline cicover::Int pascal_binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  std::vector<cicover::Int> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
  }
  return row[static_cast<size_t>(k)];
}

// Every nondecreasing tuple of `parts` integers >= min_part summing to S,
// grouped by product. No pruning beyond the sum bound, so the result is the
// ground truth for the pruned solver.
using TupleBuckets = std::map<long long, std::set<std::vector<int>>>;

inline void naive_tuples_rec(long long remaining, int parts_left, int low,
                             std::vector<int>& prefix, TupleBuckets& out) {
  if (parts_left == 0) {
    if (remaining != 0) return;
    long long prod = 1;
    for (int c : prefix) prod *= c;
    out[prod].insert(prefix);
    return;
  }
  for (int c = low; static_cast<long long>(c) <= remaining; ++c) {
    prefix.push_back(c);
    naive_tuples_rec(remaining - c, parts_left - 1, c, prefix, out);
    prefix.pop_back();
  }
}

inline TupleBuckets naive_tuples(long long S, int parts, int min_part) {
  TupleBuckets out;
  std::vector<int> prefix;
  naive_tuples_rec(S, parts, min_part, prefix, out);
  return out;
}

}  // namespace oracles
