#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cicover/classify.hpp"
#include "cicover/obstruction.hpp"

namespace cicover {

enum class CoverFamily {
  SimpleCyclic,  // degree-n cyclic, twists ik
  ZnZ2,          // (Z_n with twist k) x (Z_2 with twist l), total degree 2n
};

enum class Criterion { EmbeddingA, EmbeddingB, Birational, DegreePreserved, Halving };

const char* cover_family_name(CoverFamily f);
const char* criterion_name(Criterion c);

// Admissible region of the necessary-condition bounds for one criterion in one
// cover family, at fixed (m, n, k, l, s). Empty (N_min > N_max) when the
// criterion is impossible there (e.g. degree-preserving with min twist <= 2).
// k bounds are populated only for the halving case, where k is constrained by
// (N, s) rather than the other way round.
struct BoundBox {
  long long N_min = 0;
  long long N_max = -1;
  long long s_min = 0;  // criterion forces s >= s_min; box is empty below it
  std::optional<long long> k_min;
  std::optional<long long> k_max;

  bool empty() const { return N_min > N_max; }
  bool contains_N(long long N) const { return N >= N_min && N <= N_max; }
};

// l is ignored for SimpleCyclic. Precondition (matching the bounds' running
// hypothesis of a complete linear series): k >= 2, and l >= 2 for ZnZ2.
// Throws UnsupportedCombination for (Halving, SimpleCyclic), the one pair
// with no necessary-condition bounds.
BoundBox bound_box(Criterion c, CoverFamily fam, long long m, long long n,
                   long long k, long long l, long long s);

struct Range {
  long long lo = 0;
  long long hi = -1;
  bool contains(long long v) const { return v >= lo && v <= hi; }
  bool valid() const { return lo <= hi; }
};

Range parse_range(const std::string& text);  // "a..b" or single "a"

struct EnumFilter {
  CoverFamily family = CoverFamily::SimpleCyclic;
  Criterion behavior = Criterion::EmbeddingA;
  Range m_range;
  Range s_range;
  std::optional<long long> k;  // fixed twist; swept (>= 1) when absent
  std::optional<long long> l;  // ZnZ2 only; swept (>= 1) when absent
  std::optional<Range> n_range;  // order of the cyclic factor; swept when absent
  // Per-row obstruction search options.
  SolveOptions solve;
};

struct EnumRow {
  long long m = 0;
  long long n = 0;  // cyclic factor order (cover degree is n or 2n by family)
  long long k = 0;
  long long l = 0;  // 0 for pure cyclic rows
  CoverFamily family = CoverFamily::SimpleCyclic;
  CompleteIntersection ci;
  CoverSpec spec;
  CoverAnalysis analysis;
  Verdict verdict;
  CIObstruction obstruction;
};

// Stream every configuration in the filter box whose classification satisfies
// the requested behavior. Deterministic: rows are emitted in lexicographic
// order of (m, n, k, l, N, s, multidegree); multidegrees are generated in
// canonical nondecreasing form, so no duplicates can arise. The sweep is
// finite because ram <= m + s_max bounds n, k, l and N <= 2m + s_max + 1 - ram
// bounds the ambient dimension. (Halving, SimpleCyclic) yields an empty
// stream: no tower, so the criterion never holds.
void enumerate_configs(const EnumFilter& filter,
                       const std::function<void(const EnumRow&)>& emit);

std::vector<EnumRow> enumerate_to_vector(const EnumFilter& filter);

// Raw sweep for checking the necessary-condition bounds against brute force:
// iterates *all* configurations (no bound-derived pruning beyond finiteness of
// the sample box itself) and records any criterion-satisfying configuration
// that escapes its bound_box.
struct SampleBox {
  Range m;
  Range n;
  Range k;
  Range l;  // ignored for SimpleCyclic
  Range s;
  // Per-cell cap on m + s - ram, i.e. on the multidegree excess above the
  // all-2's floor; keeps the scan volume predictable across cells whose
  // ramification differs. The effective s ceiling is min(s.hi, ram - m + cap).
  long long max_slack = 32;
};

struct LemmaViolation {
  long long m = 0, n = 0, k = 0, l = 0, N = 0, s = 0;
  std::vector<int> multidegree;
  BoundBox box;
};

struct LemmaReport {
  long long configs_scanned = 0;    // all configurations visited
  long long criterion_hits = 0;     // those satisfying the criterion
  std::vector<LemmaViolation> violations;
};

LemmaReport verify_bound_lemma(Criterion c, CoverFamily fam, const SampleBox& box,
                               std::size_t max_violations = 16);

// Criterion-agnostic scan over the same sample box, reporting which behaviors
// hold per configuration as a bitmask. Backs the exclusion checks.
inline constexpr unsigned kDegreePreservedBit = 1u;
inline constexpr unsigned kBirationalBit = 2u;
inline constexpr unsigned kEmbeddingABit = 4u;
inline constexpr unsigned kEmbeddingBBit = 8u;
inline constexpr unsigned kHalvingBit = 16u;

struct ScanConfig {
  long long m = 0, n = 0, k = 0, l = 0, N = 0, s = 0;
  const std::vector<int>& d;
};

void scan_behaviors(CoverFamily fam, const SampleBox& box,
                    const std::function<void(const ScanConfig&, unsigned)>& visit);

}  // namespace cicover
