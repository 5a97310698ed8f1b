#include "cicover/enumerate.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <string>

#include "cicover/criteria.hpp"
#include "cicover/errors.hpp"

namespace cicover {

const char* cover_family_name(CoverFamily f) {
  switch (f) {
    case CoverFamily::SimpleCyclic: return "cyclic";
    case CoverFamily::ZnZ2: return "znz2";
  }
  return "?";
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::EmbeddingA: return "emb-a";
    case Criterion::EmbeddingB: return "emb-b";
    case Criterion::Birational: return "bir";
    case Criterion::DegreePreserved: return "preserved";
    case Criterion::Halving: return "halving";
  }
  return "?";
}

Range parse_range(const std::string& text) {
  auto parse_ll = [&](const std::string& piece) -> long long {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(piece, &pos);
    } catch (...) {
      fail(Violation::BadArgument, "range '" + text + "' is not of the form a..b");
    }
    if (pos != piece.size())
      fail(Violation::BadArgument, "range '" + text + "' is not of the form a..b");
    return v;
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_ll(text);
    return r;
  }
  r.lo = parse_ll(text.substr(0, dots));
  r.hi = parse_ll(text.substr(dots + 2));
  if (!r.valid()) fail(Violation::BadArgument, "range '" + text + "' is empty (lo > hi)");
  return r;
}

namespace {

long long ceil_div(long long a, long long b) {  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

long long floor_div(long long a, long long b) {  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace

BoundBox bound_box(Criterion c, CoverFamily fam, long long m, long long n,
                   long long k, long long l, long long s) {
  if (m < 2) fail(Violation::BadArgument, "need dim >= 2 (m = " + std::to_string(m) + ")");
  if (n < 2) fail(Violation::BadArgument, "need cyclic order n >= 2");
  const bool znz2 = fam == CoverFamily::ZnZ2;
  if (!znz2) l = 0;
  // The bounds presuppose a complete linear series (every twist >= 2).
  if (k < 2 || (znz2 && l < 2))
    fail(Violation::BadArgument, "bounds assume twists k (and l) >= 2");

  BoundBox b;
  auto mark_empty = [&b] { b.N_min = 1; b.N_max = 0; };
  switch (c) {
    case Criterion::EmbeddingA:
      if (!znz2) {
        b.s_min = (n - 1) * (n + 2) - (m + n);
        b.N_min = m + n - 1;
        b.N_max = 2 * (m + n) + s - (n - 1) * (n + 2) - 1;
      } else {
        b.s_min = 2 * n * n - m;
        b.N_min = m + 2 * n - 1;
        b.N_max = 2 * (m + 2 * n - 1) - 2 * n * (n + 1) + s + 1;
      }
      break;
    case Criterion::EmbeddingB:
      if (!znz2) {
        b.s_min = 2 * m * (n - 2) + n * (2 * n - 3);
        b.N_min = 2 * m + n - 1;
        b.N_max = 2 * (2 * m + n - 1) - 2 * (n - 1) * (m + n) + s + 1;
      } else {
        b.s_min = 2 * m * (n - 1) + n * (2 * n - 1);
        b.N_min = 2 * m + 2 * n - 1;
        b.N_max = 2 * (2 * m + 2 * n - 1) - 2 * n * (m + 2 * n) + s + 1;
      }
      break;
    case Criterion::Birational:
      if (!znz2) {
        const long long h = n / 2;
        b.s_min = 2 * (n - 1) * (h + 1) - (m + h) - 1;
        b.N_min = m + h;
        b.N_max = 2 * (m + h) - 2 * (n - 1) * (h + 1) + s + 1;
      } else {
        b.s_min = 2 * n * n + n - m - 1;
        b.N_min = m + n;
        b.N_max = 2 * m - 2 * n * n + s + 1;
      }
      break;
    case Criterion::DegreePreserved:
      if (!znz2) {
        // d_r < k forces k >= 3 (degrees start at 2).
        if (k < 3) { mark_empty(); break; }
        b.s_min = k * (n - 1) - m;  // below this even N = m+1 is excluded
        b.N_max = 2 * m + s + 1 - k * (n - 1);
        b.N_min = std::max(ceil_div(s + 1 + m * (k - 1) - k * (n - 1), k - 2), m + 1);
      } else {
        // Smallest twist is min(k, l); both must exceed any degree >= 2.
        if (k < 3 || l < 3) { mark_empty(); break; }
        b.s_min = l + k * (n - 1) - m;
        b.N_max = 2 * m + s + 1 - l - k * (n - 1);
        b.N_min = std::max({ceil_div(m * (k - 1) + s + 1 - l - k * (n - 1), k - 2),
                            ceil_div(m * (l - 1) + s + 1 - l - k * (n - 1), l - 2),
                            m + 1});
      }
      break;
    case Criterion::Halving:
      if (!znz2)
        fail(Violation::UnsupportedCombination,
             "no halving bounds for a plain cyclic cover (nothing to factor through)");
      b.k_min = 2 * l + 1;
      b.k_max = floor_div(m + s + 2 - 2 * l, n - 1);
      b.s_min = 2 * l + (n - 1) * (2 * l + 1) - (m + 2);
      b.N_min = m + 1;
      b.N_max = 2 * (m + 1) + s + 1 - 2 * l - k * (n - 1);
      if (k < *b.k_min || k > *b.k_max) mark_empty();
      break;
  }
  return b;
}

namespace {

struct CellContext {
  long long m = 0, n = 0, k = 0, l = 0;
  long long ram = 0;
  CoverFamily family = CoverFamily::SimpleCyclic;
  std::vector<int> twists;
  TowerDecomposition tower;  // populated for ZnZ2 cells
  bool has_tower = false;
};

CellContext make_cell(CoverFamily fam, long long m, long long n, long long k, long long l) {
  CellContext cell;
  cell.m = m;
  cell.n = n;
  cell.k = k;
  cell.l = fam == CoverFamily::ZnZ2 ? l : 0;
  cell.family = fam;
  if (fam == CoverFamily::SimpleCyclic) {
    cell.ram = k * (n - 1);
    cell.twists = trace_zero_twists(make_simple_cyclic(static_cast<int>(n), static_cast<int>(k)));
  } else {
    cell.ram = k * (n - 1) + l;
    cell.twists = trace_zero_twists(make_cyclic_product(
        {{static_cast<int>(n), static_cast<int>(k)}, {2, static_cast<int>(l)}}));
    cell.tower.outer_twists.clear();
    for (long long i = 1; i < n; ++i)
      cell.tower.outer_twists.push_back(static_cast<int>(i * k));
    cell.tower.inner_l = static_cast<int>(l);
    cell.has_tower = true;
  }
  return cell;
}

bool criterion_holds(Criterion c, const CellContext& cell, long long N,
                     const std::vector<int>& d) {
  switch (c) {
    case Criterion::EmbeddingA: return detail::embedding_a(d, cell.twists);
    case Criterion::EmbeddingB: return detail::embedding_b(d, cell.twists, N);
    case Criterion::Birational: return detail::birational(d, cell.twists);
    case Criterion::DegreePreserved: return detail::degree_preserved(d, cell.twists);
    case Criterion::Halving:
      return cell.has_tower && detail::halving(d, cell.tower.outer_twists, cell.tower.inner_l);
  }
  return false;
}

// Visit every (N, s, multidegree) of the cell with s in [s_lo, s_hi]:
// N in [m+1, 2m+s_hi+1-ram], delta = N+s+1-ram split into r = N-m
// nondecreasing parts >= 2. Lexicographic in (N, s, d).
template <class Visit>
void sweep_cell(const CellContext& cell, long long s_lo, long long s_hi, Visit&& visit) {
  const long long m = cell.m;
  const long long N_hi = 2 * m + s_hi + 1 - cell.ram;
  std::vector<int> d;
  for (long long N = m + 1; N <= N_hi; ++N) {
    const long long r = N - m;
    d.resize(static_cast<std::size_t>(r));
    const long long s_start = std::max(s_lo, cell.ram + N - 2 * m - 1);  // delta >= 2r
    for (long long s = s_start; s <= s_hi; ++s) {
      const long long delta = N + s + 1 - cell.ram;
      if (delta > INT_MAX)
        fail(Violation::BadArgument, "requested degrees exceed integer range");
      const auto rec = [&](auto&& self, std::size_t pos, long long lo, long long rem) -> void {
        const long long left = r - static_cast<long long>(pos);
        if (left == 1) {
          d[pos] = static_cast<int>(rem);
          visit(N, s, const_cast<const std::vector<int>&>(d));
          return;
        }
        for (long long c = lo; c * left <= rem; ++c) {
          d[pos] = static_cast<int>(c);
          self(self, pos + 1, c, rem - c);
        }
      };
      rec(rec, 0, 2, delta);
    }
  }
}

// Shared outer loops over (m, n, k, l) cells for the raw scans. The per-cell
// s window is clipped at ram - m + max_slack, which caps the multidegree
// excess above the all-2's floor and keeps the scan budget predictable.
template <class CellVisit>
void scan_core(CoverFamily fam, const SampleBox& box, CellVisit&& visit_cell) {
  if (!box.m.valid() || !box.n.valid() || !box.k.valid() || !box.s.valid())
    fail(Violation::BadArgument, "sample box has an empty range");
  if (fam == CoverFamily::ZnZ2 && !box.l.valid())
    fail(Violation::BadArgument, "sample box has an empty l range");
  for (long long m = std::max(2LL, box.m.lo); m <= box.m.hi; ++m)
    for (long long n = std::max(2LL, box.n.lo); n <= box.n.hi; ++n)
      for (long long k = std::max(1LL, box.k.lo); k <= box.k.hi; ++k) {
        const long long l_lo = fam == CoverFamily::ZnZ2 ? std::max(1LL, box.l.lo) : 0;
        const long long l_hi = fam == CoverFamily::ZnZ2 ? box.l.hi : 0;
        for (long long l = l_lo; l <= l_hi; ++l) {
          CellContext cell = make_cell(fam, m, n, k, l);
          const long long s_hi = std::min(box.s.hi, cell.ram - m + box.max_slack);
          if (s_hi < box.s.lo) continue;
          visit_cell(cell, box.s.lo, s_hi);
        }
      }
}

}  // namespace

void enumerate_configs(const EnumFilter& filter,
                       const std::function<void(const EnumRow&)>& emit) {
  if (!filter.m_range.valid() || !filter.s_range.valid())
    fail(Violation::BadArgument, "empty m or s range");
  if (filter.k && *filter.k < 1) fail(Violation::BadArgument, "twist k must be >= 1");
  if (filter.l && *filter.l < 1) fail(Violation::BadArgument, "twist l must be >= 1");
  if (filter.n_range && !filter.n_range->valid())
    fail(Violation::BadArgument, "empty n range");
  const bool znz2 = filter.family == CoverFamily::ZnZ2;
  // A plain cyclic cover has no intermediate double cover to factor through.
  if (filter.behavior == Criterion::Halving && !znz2) return;

  const long long s_hi = filter.s_range.hi;
  const long long k_floor = filter.k.value_or(1);
  const long long l_floor = znz2 ? filter.l.value_or(1) : 0;

  for (long long m = std::max(2LL, filter.m_range.lo); m <= filter.m_range.hi; ++m) {
    const long long ram_budget = m + s_hi;  // ram > m + s_max leaves no ambient N
    const long long n_lo = filter.n_range ? std::max(2LL, filter.n_range->lo) : 2;
    for (long long n = n_lo;; ++n) {
      if (filter.n_range && n > filter.n_range->hi) break;
      if (k_floor * (n - 1) + l_floor > ram_budget) break;
      const long long k_lo = filter.k.value_or(1);
      const long long k_hi =
          filter.k ? *filter.k : (ram_budget - l_floor) / (n - 1);
      for (long long k = k_lo; k <= k_hi; ++k) {
        const long long l_lo = znz2 ? filter.l.value_or(1) : 0;
        const long long l_hi = znz2
                                   ? (filter.l ? *filter.l : ram_budget - k * (n - 1))
                                   : 0;
        for (long long l = l_lo; l <= l_hi; ++l) {
          const CellContext cell = make_cell(filter.family, m, n, k, l);
          if (cell.ram > ram_budget) continue;
          sweep_cell(cell, filter.s_range.lo, s_hi,
                     [&](long long N, long long s, const std::vector<int>& d) {
                       if (!criterion_holds(filter.behavior, cell, N, d)) return;
                       EnumRow row;
                       row.m = m;
                       row.n = n;
                       row.k = k;
                       row.l = cell.l;
                       row.family = filter.family;
                       row.ci = make_ci(static_cast<int>(N), d);
                       row.spec = znz2
                                      ? make_cyclic_product({{static_cast<int>(n),
                                                              static_cast<int>(k)},
                                                             {2, static_cast<int>(l)}})
                                      : make_simple_cyclic(static_cast<int>(n),
                                                           static_cast<int>(k));
                       row.analysis = analyze(row.ci, row.spec);
                       row.verdict = cell.has_tower
                                         ? classify(row.ci, row.spec, cell.tower)
                                         : classify(row.ci, row.spec);
                       row.obstruction = obstruction_report(row.ci, row.spec, filter.solve);
                       emit(row);
                     });
        }
      }
    }
  }
}

std::vector<EnumRow> enumerate_to_vector(const EnumFilter& filter) {
  std::vector<EnumRow> rows;
  enumerate_configs(filter, [&](const EnumRow& r) { rows.push_back(r); });
  return rows;
}

LemmaReport verify_bound_lemma(Criterion c, CoverFamily fam, const SampleBox& box,
                               std::size_t max_violations) {
  if (c == Criterion::Halving && fam == CoverFamily::SimpleCyclic)
    fail(Violation::UnsupportedCombination,
         "no halving bounds for a plain cyclic cover (nothing to factor through)");
  // The bounds' running hypothesis is a complete linear series: twists >= 2.
  SampleBox b = box;
  b.k.lo = std::max(b.k.lo, 2LL);
  if (fam == CoverFamily::ZnZ2) b.l.lo = std::max(b.l.lo, 2LL);

  LemmaReport rep;
  scan_core(fam, b, [&](const CellContext& cell, long long s_lo, long long s_hi) {
    sweep_cell(cell, s_lo, s_hi, [&](long long N, long long s, const std::vector<int>& d) {
      ++rep.configs_scanned;
      if (!criterion_holds(c, cell, N, d)) return;
      ++rep.criterion_hits;
      const BoundBox bb = bound_box(c, fam, cell.m, cell.n, cell.k, cell.l, s);
      bool ok = !bb.empty() && bb.contains_N(N) && s >= bb.s_min;
      if (ok && c == Criterion::Halving) {
        // Multidegree-aware necessary conditions for the halving case:
        // delta <= r*d_r gives N(d_r - 1) >= m*d_r + s + 1 - l - k(n-1),
        // and beyond the minimal ambient dimension the s floor tightens.
        const long long d_top = d.back();
        ok = N * (d_top - 1) >=
             cell.m * d_top + s + 1 - cell.l - cell.k * (cell.n - 1);
        if (ok && N >= cell.m + 2)
          ok = s >= 2 * cell.l + (2 * cell.l + 1) * (cell.n - 1) - (cell.m + 1);
      }
      if (!ok && rep.violations.size() < max_violations)
        rep.violations.push_back({cell.m, cell.n, cell.k, cell.l, N, s, d, bb});
    });
  });
  return rep;
}

void scan_behaviors(CoverFamily fam, const SampleBox& box,
                    const std::function<void(const ScanConfig&, unsigned)>& visit) {
  scan_core(fam, box, [&](const CellContext& cell, long long s_lo, long long s_hi) {
    sweep_cell(cell, s_lo, s_hi, [&](long long N, long long s, const std::vector<int>& d) {
      unsigned mask = 0;
      if (detail::degree_preserved(d, cell.twists)) mask |= kDegreePreservedBit;
      if (detail::birational(d, cell.twists)) mask |= kBirationalBit;
      if (detail::embedding_a(d, cell.twists)) mask |= kEmbeddingABit;
      if (detail::embedding_b(d, cell.twists, N)) mask |= kEmbeddingBBit;
      if (cell.has_tower &&
          detail::halving(d, cell.tower.outer_twists, cell.tower.inner_l))
        mask |= kHalvingBit;
      visit(ScanConfig{cell.m, cell.n, cell.k, cell.l, N, s, d}, mask);
    });
  });
}

}  // namespace cicover
