#pragma once

#include <string>
#include <vector>

#include "cicover/cover.hpp"

namespace cicover {

// If the deformed image were a complete intersection of multidegree
// (c_1, ..., c_r) in the same P^N, then sum c_i = S and prod c_i = P with:
struct CIConstraints {
  long long S = 0;  // delta + ram
  Int P;            // n * prod d_i
  int parts = 0;    // r
};

CIConstraints ci_constraints(const CompleteIntersection& ci, const CoverSpec& spec);

// AM-GM: real tuples with sum S and product P exist iff S^r >= P * r^r, so
// S^r < P * r^r certifies infeasibility without any search. Exact comparison.
bool amgm_infeasible(long long S, const Int& P, int parts);

enum class ObstructionKind {
  Solvable,             // at least one tuple found
  InfeasibleAMGM,       // ruled out by the mean inequality, no search run
  InfeasibleExhausted,  // search completed with no solution
  BudgetExceeded,       // search stopped early; result inconclusive
};

const char* obstruction_kind_name(ObstructionKind k);

struct SolveOptions {
  int min_part = 2;                  // smallest admissible c_i
  long long node_budget = 1000000;   // candidate extensions tried before giving up
  bool use_amgm_shortcut = true;     // disable to force a full search (testing)
};

struct CIObstruction {
  long long S = 0;
  Int P;
  int parts = 0;
  ObstructionKind kind = ObstructionKind::InfeasibleExhausted;
  std::vector<std::vector<int>> witnesses;  // nondecreasing tuples, lexicographic
  long long nodes = 0;

  bool infeasible() const {
    return kind == ObstructionKind::InfeasibleAMGM ||
           kind == ObstructionKind::InfeasibleExhausted;
  }
  // e.g. "Solvable[(4 6)]", "Infeasible(AMGM)", "BudgetExceeded".
  std::string to_string() const;
};

// All nondecreasing tuples of `parts` integers >= min_part with sum S and
// product P. Deterministic: witnesses come out in lexicographic order.
CIObstruction solve_ci(long long S, const Int& P, int parts,
                       const SolveOptions& opts = {});

CIObstruction obstruction_report(const CompleteIntersection& ci,
                                 const CoverSpec& spec,
                                 const SolveOptions& opts = {});

}  // namespace cicover
