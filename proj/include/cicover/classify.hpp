#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cicover/cover.hpp"

namespace cicover {

// Each certificate records the index/inequality that witnessed its criterion;
// indices are 1-based into the sorted multidegree (d_1 <= ... <= d_r) and the
// sorted twist list (k_1 <= ... <= k_{n-1}).

// Every deformation keeps degree n: d_r < k_1.
struct DegreePreservedCert {
  int d_top = 0;  // d_r
  int k_min = 0;  // k_1
};

// Deformations map to degree-1 (birational) morphisms:
// r > floor(n/2) - 1 and d_{r - floor(n/2) + 1} >= k_{n-1}.
struct BirationalCert {
  int index = 0;       // r - floor(n/2) + 1
  int d_at_index = 0;  // d_index
  int k_top = 0;       // k_{n-1}
};

// Deformations embed: indices l_1 < ... < l_{n-1} with d_{l_j} = k_j.
struct EmbeddingACert {
  std::vector<int> indices;  // the matched l_j, 1-based
};

// Deformations embed (dimension-count variant):
// r > (N + n - 2)/2 and d_{2r + 2 - n - N} >= k_{n-1}.
struct EmbeddingBCert {
  int index = 0;  // 2r + 2 - n - N
  int d_at_index = 0;
  int k_top = 0;
};

// Tower (outer twists k'_1 <= ... <= k'_{n/2 - 1}, inner double-cover twist l):
// deformations factor through the degree-(n/2) subcover when
// k'_1 > max(2l, d_r) and d_r >= l. The intermediate image is smooth when
// additionally (rule 1) some d_i == l, or (rule 2) r > N/2 and d_{2r-N} >= l.
struct HalvingCert {
  int outer_min = 0;  // k'_1
  int inner_l = 0;
  int d_top = 0;  // d_r
  bool smooth_image = false;
  int smooth_rule = 0;   // 0 = none, 1 or 2 as above
  int smooth_index = 0;  // witnessing 1-based index into the multidegree
};

std::optional<DegreePreservedCert> check_degree_preserved(
    const CompleteIntersection& ci, const CoverSpec& spec);
std::optional<BirationalCert> check_birational(const CompleteIntersection& ci,
                                               const CoverSpec& spec);
std::optional<EmbeddingACert> check_embedding_a(const CompleteIntersection& ci,
                                                const CoverSpec& spec);
std::optional<EmbeddingBCert> check_embedding_b(const CompleteIntersection& ci,
                                                const CoverSpec& spec);

// Tower data is explicit; use tower_of/require_tower to obtain it from a
// product cover with the trailing order-2 factor convention.
std::optional<HalvingCert> check_halving(const CompleteIntersection& ci,
                                         const std::vector<int>& outer_twists,
                                         int inner_l);

enum class Summary { Embedding, Birational, Halves, DegreePreserved, Inconclusive };
const char* summary_name(Summary s);

struct CIStatus {
  enum Kind { Unknown, KnownCI_codim2, ExpectedCI } kind = Unknown;
  // Set iff kind == ExpectedCI: the multidegree the deformed image is expected
  // to carry (each twist-generator κ_j replaced by n_j·κ_j, re-sorted).
  std::vector<int> expected_multidegree;
};

std::string ci_status_string(const CIStatus& st);

struct Verdict {
  std::optional<DegreePreservedCert> degree_preserved;
  std::optional<BirationalCert> birational;
  std::optional<EmbeddingACert> embedding_a;
  std::optional<EmbeddingBCert> embedding_b;
  std::optional<HalvingCert> halving;  // only when tower data was supplied
  Summary summary = Summary::Inconclusive;
  CIStatus ci_status;

  // Names of all behaviors that hold, in fixed order (DegreePreserved,
  // Birational, EmbeddingA, EmbeddingB, HalvesDegree).
  std::vector<std::string> behavior_names() const;
};

Verdict classify(const CompleteIntersection& ci, const CoverSpec& spec);
Verdict classify(const CompleteIntersection& ci, const CoverSpec& spec,
                 const TowerDecomposition& tower);

}  // namespace cicover
