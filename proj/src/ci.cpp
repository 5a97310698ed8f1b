#include "cicover/ci.hpp"

#include <algorithm>
#include <numeric>

#include "cicover/errors.hpp"

namespace cicover {

long long CompleteIntersection::delta() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

Int CompleteIntersection::total_deg() const {
  Int p = 1;
  for (int d : degrees) p *= d;
  return p;
}

CompleteIntersection make_ci(int N, std::vector<int> degrees) {
  if (degrees.empty())
    fail(Violation::EmptyMultidegree, "need at least one defining degree");
  for (int d : degrees)
    if (d < 2)
      fail(Violation::DegreeTooSmall,
           "degree " + std::to_string(d) + " < 2 (linear forms only cut down the ambient space)");
  std::sort(degrees.begin(), degrees.end());
  const int r = static_cast<int>(degrees.size());
  if (N - r < 2)
    fail(Violation::CodimTooLarge, "dim = N - r = " + std::to_string(N - r) +
                                       " < 2 (N = " + std::to_string(N) +
                                       ", r = " + std::to_string(r) + ")");
  return CompleteIntersection{N, std::move(degrees)};
}

// Numerator prod_i (1 - t^{d_i}) as a dense coefficient vector of length
// delta + 1. Built by r successive subtract-shifted passes, O(r * delta).
static std::vector<Int> koszul_numerator(const CompleteIntersection& ci) {
  std::vector<Int> num(static_cast<std::size_t>(ci.delta()) + 1);
  num[0] = 1;
  std::size_t used = 0;  // current polynomial degree
  for (int d : ci.degrees) {
    used += static_cast<std::size_t>(d);
    for (std::size_t j = used; j >= static_cast<std::size_t>(d); --j)
      num[j] -= num[j - static_cast<std::size_t>(d)];
  }
  return num;
}

Int h0(const CompleteIntersection& ci, long long a) {
  if (a < 0) return 0;
  const std::vector<Int> num = koszul_numerator(ci);
  // coeff of t^a in num / (1-t)^{N+1} = sum_j num[j] * C(N + a - j, N).
  Int total = 0;
  const long long top = std::min<long long>(a, ci.delta());
  for (long long j = 0; j <= top; ++j)
    if (num[static_cast<std::size_t>(j)] != 0)
      total += num[static_cast<std::size_t>(j)] * binomial(ci.N + a - j, ci.N);
  return total;
}

long long canonical_twist(const CompleteIntersection& ci) {
  return ci.delta() - ci.N - 1;
}

}  // namespace cicover
