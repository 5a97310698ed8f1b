#include "cicover/classify.hpp"

#include <algorithm>
#include <sstream>

#include "cicover/criteria.hpp"
#include "cicover/errors.hpp"

namespace cicover {

namespace detail {

bool degree_preserved(const std::vector<int>& d, const std::vector<int>& twists) {
  return d.back() < twists.front();
}

bool birational(const std::vector<int>& d, const std::vector<int>& twists) {
  const long long n = static_cast<long long>(twists.size()) + 1;
  const long long idx = static_cast<long long>(d.size()) - n / 2 + 1;  // 1-based
  return idx >= 1 && d[static_cast<std::size_t>(idx - 1)] >= twists.back();
}

bool embedding_a(const std::vector<int>& d, const std::vector<int>& twists) {
  // The twist multiset must embed into the degree multiset at strictly
  // increasing indices; both are sorted, so the greedy match is complete.
  std::size_t i = 0;
  for (int t : twists) {
    while (i < d.size() && d[i] < t) ++i;
    if (i >= d.size() || d[i] != t) return false;
    ++i;
  }
  return true;
}

bool embedding_b(const std::vector<int>& d, const std::vector<int>& twists, long long N) {
  const long long n = static_cast<long long>(twists.size()) + 1;
  const long long r = static_cast<long long>(d.size());
  if (2 * r <= N + n - 2) return false;
  const long long idx = 2 * r + 2 - n - N;  // >= 1 once the codimension test passed
  return d[static_cast<std::size_t>(idx - 1)] >= twists.back();
}

bool halving(const std::vector<int>& d, const std::vector<int>& outer_twists, int inner_l) {
  const int k1 = outer_twists.front();
  const int d_top = d.back();
  return k1 > std::max(2 * inner_l, d_top) && d_top >= inner_l;
}

}  // namespace detail

std::optional<DegreePreservedCert> check_degree_preserved(
    const CompleteIntersection& ci, const CoverSpec& spec) {
  const std::vector<int> tw = trace_zero_twists(spec);
  if (ci.degrees.back() >= tw.front()) return std::nullopt;
  return DegreePreservedCert{ci.degrees.back(), tw.front()};
}

std::optional<BirationalCert> check_birational(const CompleteIntersection& ci,
                                               const CoverSpec& spec) {
  const std::vector<int> tw = trace_zero_twists(spec);
  const long long n = static_cast<long long>(tw.size()) + 1;
  const long long idx = ci.r() - n / 2 + 1;
  if (idx < 1) return std::nullopt;
  const int d_at = ci.degrees[static_cast<std::size_t>(idx - 1)];
  if (d_at < tw.back()) return std::nullopt;
  return BirationalCert{static_cast<int>(idx), d_at, tw.back()};
}

std::optional<EmbeddingACert> check_embedding_a(const CompleteIntersection& ci,
                                                const CoverSpec& spec) {
  const std::vector<int> tw = trace_zero_twists(spec);
  EmbeddingACert cert;
  cert.indices.reserve(tw.size());
  std::size_t i = 0;
  for (int t : tw) {
    while (i < ci.degrees.size() && ci.degrees[i] < t) ++i;
    if (i >= ci.degrees.size() || ci.degrees[i] != t) return std::nullopt;
    cert.indices.push_back(static_cast<int>(i + 1));
    ++i;
  }
  return cert;
}

std::optional<EmbeddingBCert> check_embedding_b(const CompleteIntersection& ci,
                                                const CoverSpec& spec) {
  const std::vector<int> tw = trace_zero_twists(spec);
  const long long n = static_cast<long long>(tw.size()) + 1;
  const long long r = ci.r();
  if (2 * r <= ci.N + n - 2) return std::nullopt;
  const long long idx = 2 * r + 2 - n - ci.N;
  const int d_at = ci.degrees[static_cast<std::size_t>(idx - 1)];
  if (d_at < tw.back()) return std::nullopt;
  return EmbeddingBCert{static_cast<int>(idx), d_at, tw.back()};
}

std::optional<HalvingCert> check_halving(const CompleteIntersection& ci,
                                         const std::vector<int>& outer_twists,
                                         int inner_l) {
  if (outer_twists.empty())
    fail(Violation::BadCoverParams, "tower needs at least one outer twist");
  if (inner_l < 1)
    fail(Violation::BadCoverParams, "inner double-cover twist must be >= 1");
  std::vector<int> outer = outer_twists;
  std::sort(outer.begin(), outer.end());
  if (!detail::halving(ci.degrees, outer, inner_l)) return std::nullopt;

  HalvingCert cert;
  cert.outer_min = outer.front();
  cert.inner_l = inner_l;
  cert.d_top = ci.degrees.back();
  // Rule 1: the branch degree appears in the multidegree.
  auto it = std::lower_bound(ci.degrees.begin(), ci.degrees.end(), inner_l);
  if (it != ci.degrees.end() && *it == inner_l) {
    cert.smooth_image = true;
    cert.smooth_rule = 1;
    cert.smooth_index = static_cast<int>(it - ci.degrees.begin()) + 1;
    return cert;
  }
  // Rule 2: enough equations of degree >= l.
  const long long idx = 2LL * ci.r() - ci.N;
  if (idx >= 1 && ci.degrees[static_cast<std::size_t>(idx - 1)] >= inner_l) {
    cert.smooth_image = true;
    cert.smooth_rule = 2;
    cert.smooth_index = static_cast<int>(idx);
  }
  return cert;
}

const char* summary_name(Summary s) {
  switch (s) {
    case Summary::Embedding: return "Embedding";
    case Summary::Birational: return "Birational";
    case Summary::Halves: return "Halves";
    case Summary::DegreePreserved: return "DegreePreserved";
    case Summary::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string ci_status_string(const CIStatus& st) {
  switch (st.kind) {
    case CIStatus::KnownCI_codim2: return "KnownCI_codim2";
    case CIStatus::ExpectedCI: {
      std::ostringstream os;
      os << "ExpectedCI(";
      for (std::size_t i = 0; i < st.expected_multidegree.size(); ++i)
        os << (i ? " " : "") << st.expected_multidegree[i];
      os << ")";
      return os.str();
    }
    case CIStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<std::string> Verdict::behavior_names() const {
  std::vector<std::string> names;
  if (degree_preserved) names.push_back("DegreePreserved");
  if (birational) names.push_back("Birational");
  if (embedding_a) names.push_back("EmbeddingA");
  if (embedding_b) names.push_back("EmbeddingB");
  if (halving) names.push_back("HalvesDegree");
  return names;
}

// Status of the expected deformation image as a complete intersection: codim 2
// embeddings are settled; otherwise a cyclic-built cover whose twist
// generators already appear among the degrees trades each generator kappa for
// n*kappa in the expected multidegree.
static CIStatus expected_ci_status(const CompleteIntersection& ci, const CoverSpec& spec,
                                   bool emb_a, bool emb_b) {
  CIStatus st;
  if (emb_a && ci.r() == 2) {
    st.kind = CIStatus::KnownCI_codim2;
    return st;
  }
  if (!emb_a && !emb_b) return st;
  std::vector<CyclicFactor> gens;
  if (const auto* c = std::get_if<SimpleCyclic>(&spec)) {
    gens.push_back({c->n, c->k});
  } else if (const auto* p = std::get_if<CyclicProduct>(&spec)) {
    gens = p->factors;
  } else {
    return st;  // explicit splits carry no generator data
  }
  std::vector<int> expected = ci.degrees;
  for (const auto& g : gens) {
    auto it = std::find(expected.begin(), expected.end(), g.k);
    if (it == expected.end()) return st;  // generator degree not present
    *it = g.n * g.k;
  }
  std::sort(expected.begin(), expected.end());
  st.kind = CIStatus::ExpectedCI;
  st.expected_multidegree = std::move(expected);
  return st;
}

static Verdict classify_impl(const CompleteIntersection& ci, const CoverSpec& spec,
                             const TowerDecomposition* tower) {
  Verdict v;
  v.degree_preserved = check_degree_preserved(ci, spec);
  v.birational = check_birational(ci, spec);
  v.embedding_a = check_embedding_a(ci, spec);
  v.embedding_b = check_embedding_b(ci, spec);
  if (tower) v.halving = check_halving(ci, tower->outer_twists, tower->inner_l);

  if (v.embedding_a || v.embedding_b)
    v.summary = Summary::Embedding;
  else if (v.birational)
    v.summary = Summary::Birational;
  else if (v.halving)
    v.summary = Summary::Halves;
  else if (v.degree_preserved)
    v.summary = Summary::DegreePreserved;
  else
    v.summary = Summary::Inconclusive;

  v.ci_status = expected_ci_status(ci, spec, v.embedding_a.has_value(),
                                   v.embedding_b.has_value());
  return v;
}

Verdict classify(const CompleteIntersection& ci, const CoverSpec& spec) {
  return classify_impl(ci, spec, nullptr);
}

Verdict classify(const CompleteIntersection& ci, const CoverSpec& spec,
                 const TowerDecomposition& tower) {
  return classify_impl(ci, spec, &tower);
}

}  // namespace cicover
