#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cicover/ci.hpp"

namespace cicover {

// Degree-n cyclic cover branched along a divisor in |O_Y(nk)|; the pushforward
// of O_X splits with twists k, 2k, ..., (n-1)k.
struct SimpleCyclic {
  int n = 0;  // >= 2
  int k = 0;  // >= 1
};

struct CyclicFactor {
  int n = 0;  // >= 2
  int k = 0;  // >= 1
};

// Fiber product of simple cyclic covers over the same base. Trace-zero twists
// are all nonzero lattice sums sum_j i_j * k_j with 0 <= i_j < n_j, kept with
// multiplicity. Factor order is preserved (it matters for tower_of below).
struct CyclicProduct {
  std::vector<CyclicFactor> factors;  // at least one factor
};

// Cover given directly by its split twists. The ramification twist is not
// derivable from the twists alone in general and must be supplied.
struct ExplicitSplit {
  std::vector<int> twists;  // nonempty, each >= 1
  int ram_twist = 0;        // >= max twist
};

using CoverSpec = std::variant<SimpleCyclic, CyclicProduct, ExplicitSplit>;

CoverSpec make_simple_cyclic(int n, int k);
CoverSpec make_cyclic_product(std::vector<CyclicFactor> factors);
CoverSpec make_explicit_split(std::vector<int> twists, int ram_twist);

// Twists k_1 <= ... <= k_{n-1} of the trace-zero part of the pushforward
// (sorted, with multiplicity; size = cover degree - 1).
std::vector<int> trace_zero_twists(const CoverSpec& spec);

long long cover_degree(const CoverSpec& spec);

// Twist of the ramification line bundle: largest twist for cyclic-built
// covers (= sum_j (n_j - 1) k_j), the declared value for explicit splits.
int ram_twist(const CoverSpec& spec);

// Decomposition of a product cover as (outer cyclic tower) x (inner double
// cover). Never inferred by the library proper: a product decomposes iff it
// has >= 2 factors and its *last* factor has order 2 — the positional
// convention matching the CLI syntax product:n,k;2,l. Everything else yields
// nullopt (require_tower throws NotATower instead).
struct TowerDecomposition {
  std::vector<int> outer_twists;  // sorted twists of the degree-(n/2) subcover
  int inner_l = 0;                // twist of the final double cover
};

std::optional<TowerDecomposition> tower_of(const CoverSpec& spec);
TowerDecomposition require_tower(const CoverSpec& spec);

enum class TypeFlag { Fano, CalabiYau, GeneralType };
const char* type_flag_name(TypeFlag t);

struct CoverAnalysis {
  int m = 0;             // dim X = dim Y
  long long deg = 0;     // cover degree n
  long long s = 0;       // K_X = φ*O(s)
  Int Lm;                // L^m = deg * prod d_i
  Int Km;                // K_X^m = s^m * L^m
  Int pg;                // h^0(K_X) = h0(s) + sum_t h0(s - t)
  bool complete_series = false;  // φ complete iff smallest twist >= 2
  TypeFlag type_flag = TypeFlag::GeneralType;
};

// s with K_X = φ*O(s): delta + ram - N - 1.
long long subcanonicity(const CompleteIntersection& ci, const CoverSpec& spec);

CoverAnalysis analyze(const CompleteIntersection& ci, const CoverSpec& spec);

}  // namespace cicover
