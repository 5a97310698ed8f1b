#pragma once

#include <vector>

#include "cicover/bigint.hpp"

namespace cicover {

// Smooth complete intersection Y ⊂ P^N of multidegree (d_1 <= ... <= d_r).
// Stored canonically sorted; construct via make_ci which validates
// d_i >= 2, r >= 1 and dim Y = N - r >= 2.
struct CompleteIntersection {
  int N = 0;
  std::vector<int> degrees;

  int r() const { return static_cast<int>(degrees.size()); }
  int dim() const { return N - r(); }
  // dim 2 is accepted but flagged: adjunction-style invariants below stay
  // valid, while deformation statements need the extra care the reports note.
  bool surface_mode() const { return dim() == 2; }

  long long delta() const;  // sum of the degrees
  Int total_deg() const;    // product of the degrees
};

CompleteIntersection make_ci(int N, std::vector<int> degrees);

// dim H^0(Y, O_Y(a)): coefficient of t^a in  prod_i (1 - t^{d_i}) / (1-t)^{N+1}.
// Zero for a < 0. Exact.
Int h0(const CompleteIntersection& ci, long long a);

// K_Y = O_Y(delta - N - 1); returns the twist.
long long canonical_twist(const CompleteIntersection& ci);

}  // namespace cicover
