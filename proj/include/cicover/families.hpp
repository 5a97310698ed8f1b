#pragma once

#include "cicover/enumerate.hpp"

namespace cicover {

struct FamilyConfig {
  CompleteIntersection ci;
  CoverSpec spec;
  long long n = 0;  // cyclic factor order
  long long k = 0;
  long long l = 0;  // 0 when not applicable
};

// Codimension-3 configurations with K^m a limit multiple of L^m:
// N = 9k/2, multidegree (k, 2k, 3k), degree-4 cyclic cover with twist k.
// Requires k even (BadParity otherwise), k >= 2.
FamilyConfig family_codim3_limit1(long long k);

// Configurations with m/N -> a/b along l: N = bl, m = al,
// multidegree (k, 2k, ..., (b-a)l k), cyclic cover of degree (b-a)l + 1 with
// twist k. Requires 0 < a < b, k >= 2, l >= 2.
FamilyConfig family_rational_limit(long long a, long long b, long long k, long long l);

// Embedding configurations whose image cannot be a complete intersection:
// N = 2m + n - 1, multidegree (2(n-1), ..., 2(n-1)) with m + n - 1 entries,
// degree-n cyclic cover with twist 2. Requires n >= 3, m >= 3.
FamilyConfig family_half_limit(long long n, long long m);

// Criterion-filtered enumeration at one (m, n, k, l, s, N) cell: exactly the
// rows of enumerate_configs with everything fixed and ambient dimension N.
// Throws OutOfBoundBox when (N, s) falls outside bound_box (where the
// criterion provably has no configurations).
struct RecipeQuery {
  Criterion criterion = Criterion::EmbeddingA;
  CoverFamily family = CoverFamily::SimpleCyclic;
  long long m = 0;
  long long n = 0;
  long long s = 0;
  long long N = 0;
  long long k = 2;
  long long l = 2;
};

std::vector<EnumRow> family_recipe(const RecipeQuery& q);

}  // namespace cicover
