#include "cicover/obstruction.hpp"

#include <sstream>

#include "cicover/errors.hpp"

namespace cicover {

CIConstraints ci_constraints(const CompleteIntersection& ci, const CoverSpec& spec) {
  CIConstraints c;
  c.S = ci.delta() + ram_twist(spec);
  c.P = Int(cover_degree(spec)) * ci.total_deg();
  c.parts = ci.r();
  return c;
}

bool amgm_infeasible(long long S, const Int& P, int parts) {
  if (S < 0) return true;
  const auto e = static_cast<unsigned long>(parts);
  return int_pow(Int(S), e) < P * int_pow(Int(parts), e);
}

const char* obstruction_kind_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::Solvable: return "Solvable";
    case ObstructionKind::InfeasibleAMGM: return "Infeasible(AMGM)";
    case ObstructionKind::InfeasibleExhausted: return "Infeasible(exhausted)";
    case ObstructionKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::string CIObstruction::to_string() const {
  if (kind != ObstructionKind::Solvable) return obstruction_kind_name(kind);
  std::ostringstream os;
  os << "Solvable[";
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    os << (w ? ";" : "") << "(";
    for (std::size_t i = 0; i < witnesses[w].size(); ++i)
      os << (i ? " " : "") << witnesses[w][i];
    os << ")";
  }
  os << "]";
  return os.str();
}

namespace {

struct TupleSearch {
  long long budget;
  long long nodes = 0;
  bool exceeded = false;
  std::vector<int> prefix;
  std::vector<std::vector<int>>* out;

  // Extend the nondecreasing prefix by parts_left values >= lo with sum
  // S_rem and product P_rem. Values ascend, so witnesses come out in
  // lexicographic order.
  void run(int parts_left, long long lo, long long S_rem, const Int& P_rem) {
    if (exceeded) return;
    if (parts_left == 1) {
      if (++nodes > budget) { exceeded = true; return; }
      if (S_rem >= lo && P_rem == S_rem) {
        prefix.push_back(static_cast<int>(S_rem));
        out->push_back(prefix);
        prefix.pop_back();
      }
      return;
    }
    for (long long c = lo; c * parts_left <= S_rem; ++c) {
      if (++nodes > budget) { exceeded = true; return; }
      // Remaining entries are all >= c, so their product is >= c^(left).
      if (P_rem < int_pow(Int(c), static_cast<unsigned long>(parts_left))) break;
      if (P_rem % c != 0) continue;
      const Int P_next = P_rem / c;
      const long long S_next = S_rem - c;
      // Mean inequality on the residual system prunes the branch exactly.
      const auto left = static_cast<unsigned long>(parts_left - 1);
      if (int_pow(Int(S_next), left) < P_next * int_pow(Int(parts_left - 1), left))
        continue;
      prefix.push_back(static_cast<int>(c));
      run(parts_left - 1, c, S_next, P_next);
      prefix.pop_back();
      if (exceeded) return;
    }
  }
};

}  // namespace

CIObstruction solve_ci(long long S, const Int& P, int parts, const SolveOptions& opts) {
  if (parts < 1) fail(Violation::BadArgument, "need at least one part");
  if (opts.min_part < 1) fail(Violation::BadArgument, "min part must be >= 1");
  CIObstruction res;
  res.S = S;
  res.P = P;
  res.parts = parts;
  TupleSearch search{opts.node_budget, 0, false, {}, &res.witnesses};
  search.prefix.reserve(static_cast<std::size_t>(parts));
  if (P > 0 && S >= static_cast<long long>(opts.min_part) * parts)
    search.run(parts, opts.min_part, S, P);
  res.nodes = search.nodes;
  res.kind = search.exceeded ? ObstructionKind::BudgetExceeded
             : res.witnesses.empty() ? ObstructionKind::InfeasibleExhausted
                                     : ObstructionKind::Solvable;
  return res;
}

CIObstruction obstruction_report(const CompleteIntersection& ci, const CoverSpec& spec,
                                 const SolveOptions& opts) {
  const CIConstraints c = ci_constraints(ci, spec);
  if (opts.use_amgm_shortcut && amgm_infeasible(c.S, c.P, c.parts)) {
    CIObstruction res;
    res.S = c.S;
    res.P = c.P;
    res.parts = c.parts;
    res.kind = ObstructionKind::InfeasibleAMGM;
    return res;
  }
  return solve_ci(c.S, c.P, c.parts, opts);
}

}  // namespace cicover
