#include <doctest.h>

#include <random>

#include "cicover/classify.hpp"
#include "cicover/criteria.hpp"
#include "cicover/errors.hpp"

using namespace cicover;

TEST_CASE("degree-preserving smoothing: every degree below every twist") {
  const CompleteIntersection ci = make_ci(8, {2});
  const auto cert = check_degree_preserved(ci, make_simple_cyclic(3, 3));
  REQUIRE(cert.has_value());
  CHECK(cert->d_top == 2);
  CHECK(cert->k_min == 3);

  CHECK_FALSE(check_degree_preserved(make_ci(8, {4}), make_simple_cyclic(3, 3)));
  CHECK_FALSE(check_degree_preserved(make_ci(8, {3}), make_simple_cyclic(3, 3)));
  CHECK_FALSE(check_degree_preserved(ci, make_simple_cyclic(3, 2)));
}

TEST_CASE("birational smoothing: middle degree dominates the top twist") {
  const auto cert = check_birational(make_ci(8, {4}), make_simple_cyclic(3, 2));
  REQUIRE(cert.has_value());
  CHECK(cert->index == 1);
  CHECK(cert->d_at_index == 4);
  CHECK(cert->k_top == 4);

  const auto wide = check_birational(make_ci(20, {2, 6, 6}), make_simple_cyclic(4, 2));
  REQUIRE(wide.has_value());
  CHECK(wide->index == 2);
  CHECK(wide->d_at_index == 6);
  CHECK(wide->k_top == 6);

  CHECK_FALSE(check_birational(make_ci(8, {3}), make_simple_cyclic(3, 2)));
  // Index r - floor(n/2) + 1 must stay positive.
  CHECK_FALSE(check_birational(make_ci(8, {6}), make_simple_cyclic(4, 2)));
}

TEST_CASE("embedding by matched degrees: twists inject into the multidegree") {
  const auto cert = check_embedding_a(make_ci(12, {2, 4}), make_simple_cyclic(3, 2));
  REQUIRE(cert.has_value());
  CHECK(cert->indices == std::vector<int>{1, 2});

  const auto skip =
      check_embedding_a(make_ci(20, {2, 2, 4, 6}), make_simple_cyclic(4, 2));
  REQUIRE(skip.has_value());
  CHECK(skip->indices == std::vector<int>{1, 3, 4});  // greedy match skips d_2

  CHECK_FALSE(check_embedding_a(make_ci(9, {2, 3}), make_simple_cyclic(3, 2)));
  // Multiset containment: one 2 in d cannot absorb two twists equal to 2.
  CHECK_FALSE(check_embedding_a(make_ci(11, {2, 4}),
                                make_cyclic_product({{2, 2}, {2, 2}})));
}

TEST_CASE("embedding in high codimension") {
  const auto cert =
      check_embedding_b(make_ci(8, {4, 4, 4, 4, 4}), make_simple_cyclic(3, 2));
  REQUIRE(cert.has_value());
  CHECK(cert->index == 1);
  CHECK(cert->d_at_index == 4);
  CHECK(cert->k_top == 4);

  const auto surf =
      check_embedding_b(make_ci(6, {4, 4, 4, 4}), make_simple_cyclic(3, 2));
  CHECK(surf.has_value());

  // Codimension too small for the dimension count.
  CHECK_FALSE(check_embedding_b(make_ci(9, {4, 4}), make_simple_cyclic(3, 2)));
  // Degree at the forced index too small.
  CHECK_FALSE(check_embedding_b(make_ci(8, {3, 4, 4, 4, 4}), make_simple_cyclic(3, 2)));
}

TEST_CASE("degree-halving tower criterion and smooth-image rules") {
  const CompleteIntersection ci = make_ci(9, {2});
  const auto cert = check_halving(ci, {5}, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->outer_min == 5);
  CHECK(cert->inner_l == 2);
  CHECK(cert->d_top == 2);
  CHECK(cert->smooth_image);
  CHECK(cert->smooth_rule == 1);  // some degree equals the inner twist
  CHECK(cert->smooth_index == 1);

  // No degree equal to l and 2r <= N: halving holds but the image is not
  // certified smooth.
  const auto rough = check_halving(make_ci(9, {3}), {7}, 2);
  REQUIRE(rough.has_value());
  CHECK_FALSE(rough->smooth_image);

  // Rule 2: d_{2r-N} >= l certifies smoothness without an exact match.
  const auto rule2 = check_halving(make_ci(5, {3, 3, 3}), {7}, 2);
  REQUIRE(rule2.has_value());
  CHECK(rule2->smooth_image);
  CHECK(rule2->smooth_rule == 2);
  CHECK(rule2->smooth_index == 1);

  CHECK_FALSE(check_halving(make_ci(9, {2}), {3}, 2));  // outer_min <= 2l
  CHECK_FALSE(check_halving(make_ci(9, {2}), {5}, 3));  // d_top < l
  CHECK(check_halving(make_ci(9, {5, 5}), {9}, 4).has_value());
  CHECK_THROWS_AS(check_halving(ci, {}, 2), InputError);
  CHECK_THROWS_AS(check_halving(ci, {5}, 0), InputError);
}

TEST_CASE("summary picks the strongest available deformation") {
  // Embedding beats birational when both hold.
  const Verdict both = classify(make_ci(6, {2}), make_simple_cyclic(2, 2));
  CHECK(both.embedding_a.has_value());
  CHECK(both.birational.has_value());
  CHECK(both.summary == Summary::Embedding);

  const Verdict bir = classify(make_ci(8, {4}), make_simple_cyclic(3, 2));
  CHECK(bir.summary == Summary::Birational);
  CHECK(bir.behavior_names() == std::vector<std::string>{"Birational"});

  const Verdict pres = classify(make_ci(8, {2}), make_simple_cyclic(3, 3));
  CHECK(pres.summary == Summary::DegreePreserved);

  const Verdict none = classify(make_ci(9, {3}), make_simple_cyclic(3, 2));
  CHECK(none.summary == Summary::Inconclusive);
  CHECK(none.behavior_names().empty());

  // A genuine tower reports halving through the overload that receives the
  // decomposition; the two-argument form never infers one.
  const CoverSpec tower = make_cyclic_product({{2, 5}, {2, 2}});
  const auto decomposition = tower_of(tower);
  REQUIRE(decomposition.has_value());
  const Verdict halves = classify(make_ci(9, {2}), tower, *decomposition);
  CHECK_FALSE(classify(make_ci(9, {2}), tower).halving.has_value());
  REQUIRE(halves.halving.has_value());
  CHECK(halves.summary == Summary::Halves);
  CHECK(halves.behavior_names() == std::vector<std::string>{"HalvesDegree"});
}

TEST_CASE("complete-intersection status") {
  // Codimension 2 with a matched embedding is known unconditionally.
  const Verdict known = classify(make_ci(12, {2, 4}), make_simple_cyclic(3, 2));
  CHECK(known.ci_status.kind == CIStatus::Kind::KnownCI_codim2);
  CHECK(ci_status_string(known.ci_status) == "KnownCI_codim2");

  // Higher codimension: expected multidegree replaces each generator twist
  // kappa_j by n_j * kappa_j.
  const Verdict expected =
      classify(make_ci(20, {2, 2, 4, 6}), make_simple_cyclic(4, 2));
  CHECK(expected.ci_status.kind == CIStatus::Kind::ExpectedCI);
  CHECK(expected.ci_status.expected_multidegree == std::vector<int>{2, 4, 6, 8});
  CHECK(ci_status_string(expected.ci_status) == "ExpectedCI(2 4 6 8)");

  const Verdict znz2 =
      classify(make_ci(12, {2, 2, 4}), make_cyclic_product({{2, 2}, {2, 2}}));
  CHECK(znz2.ci_status.kind == CIStatus::Kind::ExpectedCI);
  CHECK(znz2.ci_status.expected_multidegree == std::vector<int>{4, 4, 4});

  // The expected multidegree preserves the sum/product constraint data.
  {
    const CompleteIntersection ci = make_ci(20, {2, 2, 4, 6});
    const CoverSpec spec = make_simple_cyclic(4, 2);
    long long sum = 0;
    Int prod = 1;
    for (int d : expected.ci_status.expected_multidegree) {
      sum += d;
      prod *= d;
    }
    CHECK(sum == ci.delta() + ram_twist(spec));
    CHECK(prod == Int(cover_degree(spec)) * ci.total_deg());
  }

  // Covers not assembled from cyclic data stay unknown above codimension 2.
  const Verdict split =
      classify(make_ci(13, {2, 2, 4}), make_explicit_split({2, 2, 4}, 4));
  CHECK(split.embedding_a.has_value());
  CHECK(split.ci_status.kind == CIStatus::Kind::Unknown);
  CHECK(ci_status_string(split.ci_status) == "Unknown");
}

TEST_CASE("raw predicates agree with the certificate builders") {
  std::mt19937 rng(42u);
  std::uniform_int_distribution<int> pick_N(4, 14);
  std::uniform_int_distribution<int> pick_deg(2, 7);
  std::uniform_int_distribution<int> pick_tw(1, 7);
  std::uniform_int_distribution<int> pick_tcount(1, 4);
  for (int iter = 0; iter < 600; ++iter) {
    const int N = pick_N(rng);
    std::uniform_int_distribution<int> pick_r(1, N - 2);
    std::vector<int> d(static_cast<size_t>(pick_r(rng)));
    for (int& x : d) x = pick_deg(rng);
    std::sort(d.begin(), d.end());
    std::vector<int> tw(static_cast<size_t>(pick_tcount(rng)));
    for (int& x : tw) x = pick_tw(rng);
    std::sort(tw.begin(), tw.end());

    const CompleteIntersection ci = make_ci(N, d);
    const CoverSpec spec = make_explicit_split(tw, tw.back());
    CAPTURE(N);

    CHECK(detail::degree_preserved(d, tw) ==
          check_degree_preserved(ci, spec).has_value());
    CHECK(detail::birational(d, tw) == check_birational(ci, spec).has_value());
    CHECK(detail::embedding_a(d, tw) == check_embedding_a(ci, spec).has_value());
    CHECK(detail::embedding_b(d, tw, N) == check_embedding_b(ci, spec).has_value());

    const int l = pick_tw(rng);
    CHECK(detail::halving(d, tw, l) == check_halving(ci, tw, l).has_value());
  }
}
