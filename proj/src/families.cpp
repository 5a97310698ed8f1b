#include "cicover/families.hpp"

#include <stdexcept>
#include <string>

#include "cicover/errors.hpp"

namespace cicover {

namespace {

constexpr long long kMaxParam = 100000000;  // keeps N and every degree inside int

void check_size(long long N, long long top_degree) {
  if (N > kMaxParam || top_degree > kMaxParam)
    fail(Violation::BadArgument, "family parameters too large");
}

}  // namespace

FamilyConfig family_codim3_limit1(long long k) {
  if (k < 2) fail(Violation::BadArgument, "twist k must be >= 2");
  if ((9 * k) % 2 != 0)
    fail(Violation::BadParity,
         "ambient dimension 9k/2 is fractional for odd k = " + std::to_string(k));
  const long long N = 9 * k / 2;
  check_size(N, 3 * k);
  FamilyConfig f;
  f.ci = make_ci(static_cast<int>(N),
                 {static_cast<int>(k), static_cast<int>(2 * k), static_cast<int>(3 * k)});
  f.spec = make_simple_cyclic(4, static_cast<int>(k));
  f.n = 4;
  f.k = k;
  // The family is built to sit at s = N - 1 (K^m/L^m ratio maximal for its
  // codimension); if this ever fails the construction itself is wrong.
  if (subcanonicity(f.ci, f.spec) != N - 1)
    throw std::logic_error("codim-3 limit family: subcanonicity mismatch");
  return f;
}

FamilyConfig family_rational_limit(long long a, long long b, long long k, long long l) {
  if (!(0 < a && a < b)) fail(Violation::BadArgument, "need 0 < a < b");
  if (k < 2) fail(Violation::BadArgument, "twist k must be >= 2");
  if (l < 2) fail(Violation::BadArgument, "scale l must be >= 2");
  const long long r = (b - a) * l;
  const long long N = b * l;
  check_size(N, r * k);
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(r));
  for (long long i = 1; i <= r; ++i) degrees.push_back(static_cast<int>(i * k));
  FamilyConfig f;
  f.ci = make_ci(static_cast<int>(N), std::move(degrees));
  f.spec = make_simple_cyclic(static_cast<int>(r + 1), static_cast<int>(k));
  f.n = r + 1;
  f.k = k;
  f.l = l;
  // dim/ambient ratio a/b by construction; cross-check the closed form for s.
  const long long s_closed = l * (b - a) * ((b - a) * l + 3) * k / 2 - b * l - 1;
  if (subcanonicity(f.ci, f.spec) != s_closed)
    throw std::logic_error("rational limit family: subcanonicity mismatch");
  return f;
}

FamilyConfig family_half_limit(long long n, long long m) {
  if (n < 3) fail(Violation::BadArgument, "cover degree n must be >= 3");
  if (m < 3) fail(Violation::BadArgument, "dimension m must be >= 3");
  const long long N = 2 * m + n - 1;
  check_size(N, 2 * (n - 1));
  std::vector<int> degrees(static_cast<std::size_t>(m + n - 1),
                           static_cast<int>(2 * (n - 1)));
  FamilyConfig f;
  f.ci = make_ci(static_cast<int>(N), std::move(degrees));
  f.spec = make_simple_cyclic(static_cast<int>(n), 2);
  f.n = n;
  f.k = 2;
  return f;
}

std::vector<EnumRow> family_recipe(const RecipeQuery& q) {
  const BoundBox bb = bound_box(q.criterion, q.family, q.m, q.n, q.k, q.l, q.s);
  if (bb.empty() || !bb.contains_N(q.N)) {
    std::string region = bb.empty()
                             ? "empty"
                             : "[" + std::to_string(bb.N_min) + ", " +
                                   std::to_string(bb.N_max) + "]";
    fail(Violation::OutOfBoundBox,
         "N = " + std::to_string(q.N) + " at s = " + std::to_string(q.s) +
             " is outside the admissible region " + region + " for " +
             criterion_name(q.criterion) + "/" + cover_family_name(q.family));
  }
  EnumFilter f;
  f.family = q.family;
  f.behavior = q.criterion;
  f.m_range = {q.m, q.m};
  f.s_range = {q.s, q.s};
  f.n_range = Range{q.n, q.n};
  f.k = q.k;
  if (q.family == CoverFamily::ZnZ2) f.l = q.l;
  std::vector<EnumRow> rows;
  enumerate_configs(f, [&](const EnumRow& row) {
    if (row.ci.N == q.N) rows.push_back(row);
  });
  return rows;
}

}  // namespace cicover
