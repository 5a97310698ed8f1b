#include <doctest.h>

#include <set>
#include <tuple>

#include "cicover/criteria.hpp"
#include "cicover/enumerate.hpp"
#include "cicover/errors.hpp"
#include "golden_tables.hpp"
#include "oracles.hpp"

using namespace cicover;

TEST_CASE("range parsing") {
  CHECK(parse_range("3..7").lo == 3);
  CHECK(parse_range("3..7").hi == 7);
  CHECK(parse_range("5").lo == 5);
  CHECK(parse_range("5").hi == 5);
  CHECK(parse_range("-3..-1").lo == -3);
  CHECK(parse_range("-3..-1").hi == -1);
  CHECK(parse_range("0..0").contains(0));

  CHECK_THROWS_AS(parse_range(""), InputError);
  CHECK_THROWS_AS(parse_range("a..b"), InputError);
  CHECK_THROWS_AS(parse_range("3.."), InputError);
  CHECK_THROWS_AS(parse_range("..4"), InputError);
  CHECK_THROWS_AS(parse_range("3..x"), InputError);
  CHECK_THROWS_AS(parse_range("7..3"), InputError);
}

TEST_CASE("necessary-condition boxes: pinned corners") {
  using CF = CoverFamily;
  using Cr = Criterion;

  const BoundBox a = bound_box(Cr::EmbeddingA, CF::SimpleCyclic, 10, 3, 2, 0, -3);
  CHECK(a.s_min == -3);
  CHECK(a.N_min == 12);
  CHECK(a.N_max == 12);
  CHECK(bound_box(Cr::EmbeddingA, CF::SimpleCyclic, 10, 3, 2, 0, -4).empty());

  const BoundBox az = bound_box(Cr::EmbeddingA, CF::ZnZ2, 9, 2, 2, 2, -1);
  CHECK(az.s_min == -1);
  CHECK(az.N_min == 12);
  CHECK(az.N_max == 12);

  const BoundBox b = bound_box(Cr::EmbeddingB, CF::SimpleCyclic, 3, 3, 2, 0, 15);
  CHECK(b.s_min == 15);
  CHECK(b.N_min == 8);
  CHECK(b.N_max == 8);
  CHECK(bound_box(Cr::EmbeddingB, CF::SimpleCyclic, 3, 3, 2, 0, 16).N_max == 9);

  // High-codimension box in the mixed family: empty until N_max catches up
  // with N_min, which happens above the raw s floor.
  const BoundBox bz = bound_box(Cr::EmbeddingB, CF::ZnZ2, 3, 2, 2, 2, 18);
  CHECK(bz.N_min == 9);
  CHECK(bz.N_max == 9);
  CHECK(bound_box(Cr::EmbeddingB, CF::ZnZ2, 3, 2, 2, 2, 17).empty());

  const BoundBox bir = bound_box(Cr::Birational, CF::SimpleCyclic, 17, 4, 2, 0, -1);
  CHECK(bir.s_min == -2);
  CHECK(bir.N_min == 19);
  CHECK(bir.N_max == 20);

  const BoundBox birz = bound_box(Cr::Birational, CF::ZnZ2, 10, 2, 2, 2, -1);
  CHECK(birz.s_min == -1);
  CHECK(birz.N_min == 12);
  CHECK(birz.N_max == 12);

  const BoundBox dp = bound_box(Cr::DegreePreserved, CF::SimpleCyclic, 7, 3, 3, 0, -1);
  CHECK(dp.s_min == -1);
  CHECK(dp.N_min == 8);
  CHECK(dp.N_max == 8);
  // Twist 2 cannot exceed any admissible degree.
  CHECK(bound_box(Cr::DegreePreserved, CF::SimpleCyclic, 7, 3, 2, 0, 4).empty());
  CHECK(bound_box(Cr::DegreePreserved, CF::ZnZ2, 7, 2, 3, 2, 4).empty());

  const BoundBox h = bound_box(Cr::Halving, CF::ZnZ2, 8, 2, 5, 2, -1);
  REQUIRE(h.k_min.has_value());
  REQUIRE(h.k_max.has_value());
  CHECK(*h.k_min == 5);
  CHECK(*h.k_max == 5);
  CHECK(h.N_min == 9);
  CHECK(h.N_max == 9);
  CHECK(bound_box(Cr::Halving, CF::ZnZ2, 8, 2, 6, 2, -1).empty());

  CHECK_THROWS_AS(bound_box(Cr::Halving, CF::SimpleCyclic, 8, 2, 5, 0, -1), InputError);
  CHECK_THROWS_AS(bound_box(Cr::EmbeddingA, CF::SimpleCyclic, 8, 2, 1, 0, 0), InputError);
  CHECK_THROWS_AS(bound_box(Cr::EmbeddingA, CF::ZnZ2, 8, 2, 2, 1, 0), InputError);
}

TEST_CASE("boxes where N_max - N_min tracks s - s_min exactly") {
  using CF = CoverFamily;
  for (auto [c, fam] : std::vector<std::pair<Criterion, CoverFamily>>{
           {Criterion::EmbeddingA, CF::SimpleCyclic},
           {Criterion::EmbeddingA, CF::ZnZ2},
           {Criterion::EmbeddingB, CF::SimpleCyclic},
           {Criterion::Birational, CF::SimpleCyclic},
           {Criterion::Birational, CF::ZnZ2}}) {
    for (long long m = 3; m <= 10; ++m)
      for (long long n = 2; n <= 4; ++n)
        for (long long k = 2; k <= 3; ++k)
          for (long long l = 2; l <= 3; ++l) {
            const long long s_min = bound_box(c, fam, m, n, k, l, 0).s_min;
            for (long long s = s_min; s <= s_min + 5; ++s) {
              const BoundBox bb = bound_box(c, fam, m, n, k, l, s);
              CHECK(bb.N_max - bb.N_min == s - bb.s_min);
            }
          }
  }
}

TEST_CASE("every frozen reference row sits inside its bound box") {
  for (const auto& table : golden::all_tables()) {
    for (const auto& row : table.rows) {
      CAPTURE(table.name);
      CAPTURE(row.N);
      const BoundBox bb = bound_box(table.behavior, table.family, row.m, row.n,
                                    row.k, row.l, row.s);
      CHECK_FALSE(bb.empty());
      CHECK(bb.contains_N(row.N));
      CHECK(row.s >= bb.s_min);
      if (bb.k_min) CHECK(row.k >= *bb.k_min);
      if (bb.k_max) CHECK(row.k <= *bb.k_max);
    }
  }
}

TEST_CASE("enumeration is deterministic and lexicographically ordered") {
  EnumFilter filter;
  filter.family = CoverFamily::SimpleCyclic;
  filter.behavior = Criterion::EmbeddingA;
  filter.m_range = {4, 6};
  filter.s_range = {-2, 2};

  const auto rows = enumerate_to_vector(filter);
  const auto again = enumerate_to_vector(filter);
  REQUIRE_FALSE(rows.empty());
  REQUIRE(rows.size() == again.size());

  using Key = std::tuple<long long, long long, long long, long long, long long,
                         long long, std::vector<int>>;
  auto key = [](const EnumRow& r) {
    return Key{r.m, r.n, r.k, r.l, r.ci.N, r.analysis.s, r.ci.degrees};
  };
  std::set<Key> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(key(rows[i]) == key(again[i]));
    CHECK(seen.insert(key(rows[i])).second);  // no duplicates
    if (i) CHECK(key(rows[i - 1]) < key(rows[i]));
  }
}

TEST_CASE("enumeration matches a brute-force rebuild of one slice") {
  EnumFilter filter;
  filter.family = CoverFamily::SimpleCyclic;
  filter.behavior = Criterion::EmbeddingA;
  filter.m_range = {3, 4};
  filter.s_range = {-2, 2};
  filter.k = 2;

  using Key = std::tuple<long long, long long, long long, long long, std::vector<int>>;
  std::set<Key> got;
  for (const auto& r : enumerate_to_vector(filter))
    got.insert({r.m, r.n, r.ci.N, r.analysis.s, r.ci.degrees});

  std::set<Key> expected;
  const long long k = 2;
  for (long long m = 3; m <= 4; ++m) {
    for (long long n = 2; k * (n - 1) <= m + filter.s_range.hi; ++n) {
      std::vector<int> twists;
      for (long long i = 1; i < n; ++i) twists.push_back(static_cast<int>(i * k));
      const long long ram = k * (n - 1);
      for (long long N = m + 1; N <= 2 * m + filter.s_range.hi + 1 - ram; ++N) {
        const long long r = N - m;
        for (long long s = filter.s_range.lo; s <= filter.s_range.hi; ++s) {
          const long long delta = N + s + 1 - ram;
          if (delta < 2 * r) continue;
          for (const auto& [prod, tuples] :
               oracles::naive_tuples(delta, static_cast<int>(r), 2)) {
            (void)prod;
            for (const auto& d : tuples) {
              if (detail::embedding_a(d, twists)) expected.insert({m, n, N, s, d});
            }
          }
        }
      }
    }
  }
  CHECK(got == expected);
  CHECK_FALSE(got.empty());
}

TEST_CASE("enumeration respects fixed n, and halving needs a tower") {
  EnumFilter filter;
  filter.family = CoverFamily::SimpleCyclic;
  filter.behavior = Criterion::EmbeddingA;
  filter.m_range = {5, 7};
  filter.s_range = {-3, 1};
  filter.n_range = Range{3, 3};
  const auto rows = enumerate_to_vector(filter);
  REQUIRE_FALSE(rows.empty());
  for (const auto& r : rows) CHECK(r.n == 3);

  EnumFilter halving = filter;
  halving.behavior = Criterion::Halving;
  halving.n_range.reset();
  CHECK(enumerate_to_vector(halving).empty());

  EnumFilter bad = filter;
  bad.m_range = {7, 5};
  CHECK_THROWS_AS(enumerate_to_vector(bad), InputError);
  EnumFilter bad_k = filter;
  bad_k.k = 0;
  CHECK_THROWS_AS(enumerate_to_vector(bad_k), InputError);
}

TEST_CASE("enumerated rows carry consistent analysis and verdicts") {
  EnumFilter filter;
  filter.family = CoverFamily::ZnZ2;
  filter.behavior = Criterion::Halving;
  filter.m_range = {6, 8};
  filter.s_range = {-1, 1};
  filter.k = 5;
  filter.l = 2;
  const auto rows = enumerate_to_vector(filter);
  REQUIRE_FALSE(rows.empty());
  bool found_golden = false;
  for (const auto& r : rows) {
    CHECK(r.verdict.halving.has_value());
    CHECK(r.analysis.s == subcanonicity(r.ci, r.spec));
    CHECK(r.analysis.m == r.ci.N - r.ci.r());
    if (r.m == 8 && r.ci.N == 9 && r.analysis.s == -1) {
      found_golden = true;
      CHECK(r.ci.degrees == std::vector<int>{2});
      CHECK(r.analysis.Km == 8);
    }
  }
  CHECK(found_golden);
}

TEST_CASE("bound lemma sweeps find no escaping configuration") {
  SampleBox box;
  box.m = {3, 6};
  box.n = {2, 3};
  box.k = {2, 3};
  box.l = {2, 3};
  box.s = {-4, 8};
  box.max_slack = 12;

  for (auto [c, fam] : std::vector<std::pair<Criterion, CoverFamily>>{
           {Criterion::EmbeddingA, CoverFamily::SimpleCyclic},
           {Criterion::EmbeddingA, CoverFamily::ZnZ2},
           {Criterion::Birational, CoverFamily::SimpleCyclic},
           {Criterion::Birational, CoverFamily::ZnZ2},
           {Criterion::EmbeddingB, CoverFamily::SimpleCyclic}}) {
    const LemmaReport rep = verify_bound_lemma(c, fam, box);
    CAPTURE(criterion_name(c));
    CAPTURE(cover_family_name(fam));
    CHECK(rep.configs_scanned > 0);
    CHECK(rep.criterion_hits > 0);
    CHECK(rep.violations.empty());
  }

  SampleBox dp_box = box;
  dp_box.k = {3, 4};
  dp_box.l = {3, 4};
  const LemmaReport dp =
      verify_bound_lemma(Criterion::DegreePreserved, CoverFamily::SimpleCyclic, dp_box);
  CHECK(dp.criterion_hits > 0);
  CHECK(dp.violations.empty());

  SampleBox h_box;
  h_box.m = {6, 9};
  h_box.n = {2, 3};
  h_box.k = {5, 7};
  h_box.l = {2, 2};
  h_box.s = {-2, 2};
  h_box.max_slack = 10;
  const LemmaReport hv =
      verify_bound_lemma(Criterion::Halving, CoverFamily::ZnZ2, h_box);
  CHECK(hv.criterion_hits > 0);
  CHECK(hv.violations.empty());

  CHECK_THROWS_AS(verify_bound_lemma(Criterion::Halving, CoverFamily::SimpleCyclic, box),
                  InputError);
}

TEST_CASE("degree-preserving behavior excludes every other behavior") {
  SampleBox box;
  box.m = {3, 6};
  box.n = {2, 3};
  box.k = {1, 4};
  box.l = {1, 3};
  box.s = {-6, 8};
  box.max_slack = 10;
  for (CoverFamily fam : {CoverFamily::SimpleCyclic, CoverFamily::ZnZ2}) {
    long long preserved = 0, overlaps = 0;
    scan_behaviors(fam, box, [&](const ScanConfig&, unsigned mask) {
      if (mask & kDegreePreservedBit) {
        ++preserved;
        if (mask != kDegreePreservedBit) ++overlaps;
      }
    });
    CHECK(preserved > 0);
    CHECK(overlaps == 0);
  }
}
