#include "cicover/cover.hpp"

#include <algorithm>
#include <string>

#include "cicover/errors.hpp"

namespace cicover {

CoverSpec make_simple_cyclic(int n, int k) {
  if (n < 2) fail(Violation::BadCoverParams, "cyclic cover order n = " + std::to_string(n) + " < 2");
  if (k < 1) fail(Violation::BadCoverParams, "cyclic cover twist k = " + std::to_string(k) + " < 1");
  return SimpleCyclic{n, k};
}

CoverSpec make_cyclic_product(std::vector<CyclicFactor> factors) {
  if (factors.empty()) fail(Violation::BadCoverParams, "product cover needs at least one factor");
  for (const auto& f : factors) {
    if (f.n < 2) fail(Violation::BadCoverParams, "factor order n = " + std::to_string(f.n) + " < 2");
    if (f.k < 1) fail(Violation::BadCoverParams, "factor twist k = " + std::to_string(f.k) + " < 1");
  }
  return CyclicProduct{std::move(factors)};
}

CoverSpec make_explicit_split(std::vector<int> twists, int ram_twist) {
  if (twists.empty()) fail(Violation::BadCoverParams, "split cover needs at least one twist");
  for (int t : twists)
    if (t < 1) fail(Violation::BadCoverParams, "twist " + std::to_string(t) + " < 1");
  std::sort(twists.begin(), twists.end());
  if (ram_twist < twists.back())
    fail(Violation::BadCoverParams,
         "ramification twist " + std::to_string(ram_twist) + " < largest split twist " +
             std::to_string(twists.back()));
  return ExplicitSplit{std::move(twists), ram_twist};
}

std::vector<int> trace_zero_twists(const CoverSpec& spec) {
  struct Visitor {
    std::vector<int> operator()(const SimpleCyclic& c) const {
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(c.n) - 1);
      for (int i = 1; i < c.n; ++i) t.push_back(i * c.k);
      return t;
    }
    std::vector<int> operator()(const CyclicProduct& p) const {
      // All lattice sums sum_j i_j k_j, i_j in [0, n_j); drop the zero vector.
      std::vector<int> sums{0};
      for (const auto& f : p.factors) {
        std::vector<int> next;
        next.reserve(sums.size() * static_cast<std::size_t>(f.n));
        for (int i = 0; i < f.n; ++i)
          for (int base : sums) next.push_back(base + i * f.k);
        sums = std::move(next);
      }
      std::sort(sums.begin(), sums.end());
      // Exactly one all-zero index tuple, and it produces the smallest sum.
      sums.erase(sums.begin());
      return sums;
    }
    std::vector<int> operator()(const ExplicitSplit& s) const { return s.twists; }
  };
  return std::visit(Visitor{}, spec);
}

long long cover_degree(const CoverSpec& spec) {
  struct Visitor {
    long long operator()(const SimpleCyclic& c) const { return c.n; }
    long long operator()(const CyclicProduct& p) const {
      long long n = 1;
      for (const auto& f : p.factors) n *= f.n;
      return n;
    }
    long long operator()(const ExplicitSplit& s) const {
      return static_cast<long long>(s.twists.size()) + 1;
    }
  };
  return std::visit(Visitor{}, spec);
}

int ram_twist(const CoverSpec& spec) {
  struct Visitor {
    int operator()(const SimpleCyclic& c) const { return (c.n - 1) * c.k; }
    int operator()(const CyclicProduct& p) const {
      int r = 0;
      for (const auto& f : p.factors) r += (f.n - 1) * f.k;
      return r;
    }
    int operator()(const ExplicitSplit& s) const { return s.ram_twist; }
  };
  return std::visit(Visitor{}, spec);
}

std::optional<TowerDecomposition> tower_of(const CoverSpec& spec) {
  const auto* prod = std::get_if<CyclicProduct>(&spec);
  if (!prod || prod->factors.size() < 2) return std::nullopt;
  if (prod->factors.back().n != 2) return std::nullopt;
  CyclicProduct outer{std::vector<CyclicFactor>(prod->factors.begin(),
                                                prod->factors.end() - 1)};
  TowerDecomposition t;
  t.outer_twists = trace_zero_twists(CoverSpec{outer});
  t.inner_l = prod->factors.back().k;
  return t;
}

TowerDecomposition require_tower(const CoverSpec& spec) {
  auto t = tower_of(spec);
  if (!t)
    fail(Violation::NotATower,
         "cover does not decompose as (outer cyclic) x (trailing order-2 factor)");
  return *t;
}

const char* type_flag_name(TypeFlag t) {
  switch (t) {
    case TypeFlag::Fano: return "Fano";
    case TypeFlag::CalabiYau: return "CalabiYau";
    case TypeFlag::GeneralType: return "GeneralType";
  }
  return "?";
}

long long subcanonicity(const CompleteIntersection& ci, const CoverSpec& spec) {
  return ci.delta() + ram_twist(spec) - ci.N - 1;
}

CoverAnalysis analyze(const CompleteIntersection& ci, const CoverSpec& spec) {
  CoverAnalysis out;
  out.m = ci.dim();
  out.deg = cover_degree(spec);
  out.s = subcanonicity(ci, spec);
  out.Lm = Int(out.deg) * ci.total_deg();
  Int s_pow = int_pow(Int(out.s), static_cast<unsigned long>(out.m));
  out.Km = s_pow * out.Lm;
  // K_X pushes forward to a sum of O_Y(s - t) over the split (t = 0 and the
  // trace-zero twists), so p_g adds up ambient section counts.
  const std::vector<int> twists = trace_zero_twists(spec);
  out.pg = h0(ci, out.s);
  for (int t : twists) out.pg += h0(ci, out.s - t);
  out.complete_series = twists.front() >= 2;
  out.type_flag = out.s < 0 ? TypeFlag::Fano
                            : (out.s == 0 ? TypeFlag::CalabiYau : TypeFlag::GeneralType);
  return out;
}

}  // namespace cicover
