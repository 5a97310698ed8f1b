// Command line front end: classify covers, print invariants, decide the
// complete-intersection sum/product obstruction, enumerate configurations by
// deformation behavior, and build the named limit families.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cicover/errors.hpp"
#include "cicover/families.hpp"
#include "cicover/output.hpp"

using namespace cicover;

namespace {

long long parse_ll(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (...) {
    fail(Violation::BadArgument, what + ": '" + text + "' is not an integer");
  }
  if (pos != text.size())
    fail(Violation::BadArgument, what + ": '" + text + "' is not an integer");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream is(text);
  while (std::getline(is, piece, sep)) parts.push_back(piece);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

// cyclic:n,k | product:n1,k1;n2,k2;... | split:t1,t2,...:ram
CoverSpec parse_cover(const std::string& text) {
  const auto bad = [&text](const std::string& why) {
    fail(Violation::BadArgument,
         "cover '" + text + "': " + why +
             " (expected cyclic:n,k | product:n1,k1;n2,k2;... | split:t1,t2,...:ram)");
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) bad("missing ':'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "cyclic") {
    const auto nk = split(rest, ',');
    if (nk.size() != 2) bad("need n,k");
    return make_simple_cyclic(static_cast<int>(parse_ll(nk[0], "cover order")),
                              static_cast<int>(parse_ll(nk[1], "cover twist")));
  }
  if (kind == "product") {
    std::vector<CyclicFactor> factors;
    for (const auto& piece : split(rest, ';')) {
      const auto nk = split(piece, ',');
      if (nk.size() != 2) bad("each factor needs n,k");
      factors.push_back({static_cast<int>(parse_ll(nk[0], "factor order")),
                         static_cast<int>(parse_ll(nk[1], "factor twist"))});
    }
    return make_cyclic_product(std::move(factors));
  }
  if (kind == "split") {
    const auto ram_colon = rest.rfind(':');
    if (ram_colon == std::string::npos) bad("split needs a trailing :ram");
    std::vector<int> twists;
    for (const auto& piece : split(rest.substr(0, ram_colon), ','))
      twists.push_back(static_cast<int>(parse_ll(piece, "split twist")));
    return make_explicit_split(
        std::move(twists),
        static_cast<int>(parse_ll(rest.substr(ram_colon + 1), "ramification twist")));
  }
  bad("unknown cover kind '" + kind + "'");
  return SimpleCyclic{};  // unreachable
}

Criterion parse_behavior(const std::string& text) {
  if (text == "emb-a") return Criterion::EmbeddingA;
  if (text == "emb-b") return Criterion::EmbeddingB;
  if (text == "bir") return Criterion::Birational;
  if (text == "preserved") return Criterion::DegreePreserved;
  if (text == "halving") return Criterion::Halving;
  fail(Violation::BadArgument,
       "behavior '" + text + "' (expected emb-a|emb-b|bir|preserved|halving)");
}

CoverFamily parse_family(const std::string& text) {
  if (text == "cyclic") return CoverFamily::SimpleCyclic;
  if (text == "znz2") return CoverFamily::ZnZ2;
  fail(Violation::BadArgument, "family '" + text + "' (expected cyclic|znz2)");
}

struct CoverArgs {
  long long ambient = 0;
  std::vector<long long> degrees;
  std::string cover;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ambient", ambient, "ambient projective dimension N")->required();
    cmd->add_option("--degrees", degrees, "comma separated multidegree, e.g. 2,4,6")
        ->required()
        ->delimiter(',');
    cmd->add_option("--cover", cover,
                    "cyclic:n,k | product:n1,k1;n2,k2;... | split:t1,t2,...:ram")
        ->required();
  }

  std::pair<CompleteIntersection, CoverSpec> build() const {
    std::vector<int> d;
    d.reserve(degrees.size());
    for (long long v : degrees) d.push_back(static_cast<int>(v));
    return {make_ci(static_cast<int>(ambient), std::move(d)), parse_cover(cover)};
  }
};

OutputRow single_row(const CompleteIntersection& ci, const CoverSpec& spec,
                     const SolveOptions& solve) {
  const CoverAnalysis analysis = analyze(ci, spec);
  const auto tower = tower_of(spec);
  const Verdict verdict = tower ? classify(ci, spec, *tower) : classify(ci, spec);
  const CIObstruction obstruction = obstruction_report(ci, spec, solve);
  return make_output_row(ci, spec, analysis, verdict, obstruction);
}

OutputRow family_row(const FamilyConfig& f) {
  OutputRow row = single_row(f.ci, f.spec, SolveOptions{});
  row.n_table = f.n;
  row.k = f.k;
  if (f.l > 0) row.l = f.l;
  return row;
}

int emit(const std::string& format, const std::string& out_path, const QueryInfo& query,
         const std::vector<OutputRow>& rows, bool with_certificates) {
  const OutputFormat fmt = parse_format(format);
  std::ostringstream body;
  write_rows(body, fmt, query, rows, with_certificates);
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(out_path);
    if (!file) fail(Violation::BadArgument, "cannot open output file '" + out_path + "'");
    file << body.str();
  }
  for (const auto& r : rows)
    if (r.obstruction == "BudgetExceeded") return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation behavior of finite abelian covers of complete intersections"};
  app.require_subcommand(1);
  std::string format = "md";
  std::string out_path;
  app.add_option("--format", format, "output format: md|csv|json (default md)")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* classify_cmd =
      app.add_subcommand("classify", "deformation behavior of one cover, with certificates");
  classify_cmd->fallthrough();
  CoverArgs classify_args;
  classify_args.attach(classify_cmd);

  auto* invariants_cmd =
      app.add_subcommand("invariants", "numerical invariants (s, L^m, K^m, p_g) of one cover");
  invariants_cmd->fallthrough();
  CoverArgs invariants_args;
  invariants_args.attach(invariants_cmd);

  auto* ci_check_cmd = app.add_subcommand(
      "ci-check", "sum/product system for a complete-intersection deformation image");
  ci_check_cmd->fallthrough();
  CoverArgs ci_check_args;
  ci_check_args.attach(ci_check_cmd);
  long long min_part = 2;
  long long budget = 1000000;
  ci_check_cmd->add_option("--min-part", min_part, "smallest admissible degree (default 2)");
  ci_check_cmd->add_option("--budget", budget, "search node budget (default 1000000)");

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "sweep configurations matching a behavior criterion");
  enumerate_cmd->fallthrough();
  std::string en_family, en_behavior, en_m_range, en_s_range;
  long long en_k = -1, en_l = -1;
  enumerate_cmd->add_option("--family", en_family, "cyclic|znz2")->required();
  enumerate_cmd->add_option("--behavior", en_behavior, "emb-a|emb-b|bir|preserved|halving")
      ->required();
  enumerate_cmd->add_option("--m-range", en_m_range, "dimension range a..b")->required();
  enumerate_cmd->add_option("--s-range", en_s_range, "subcanonicity range a..b")->required();
  enumerate_cmd->add_option("--k", en_k, "fix the cyclic twist (swept when absent)");
  enumerate_cmd->add_option("--l", en_l, "fix the double-cover twist (znz2; swept when absent)");

  auto* family_cmd = app.add_subcommand("family", "named limit families");
  family_cmd->require_subcommand(1);
  family_cmd->fallthrough();

  auto* codim3_cmd = family_cmd->add_subcommand("codim3", "codimension-3 limit family");
  codim3_cmd->fallthrough();
  long long f_k = 0;
  codim3_cmd->add_option("--k", f_k, "cover twist (even, >= 2)")->required();

  auto* rational_cmd =
      family_cmd->add_subcommand("rational", "family with dim/ambient ratio a/b");
  rational_cmd->fallthrough();
  long long fr_a = 0, fr_b = 0, fr_k = 0, fr_l = 0;
  rational_cmd->add_option("--a", fr_a, "numerator of the ratio")->required();
  rational_cmd->add_option("--b", fr_b, "denominator of the ratio")->required();
  rational_cmd->add_option("--k", fr_k, "cover twist (>= 2)")->required();
  rational_cmd->add_option("--l", fr_l, "scale parameter (>= 2)")->required();

  auto* half_cmd = family_cmd->add_subcommand(
      "half", "embedding family whose image cannot be a complete intersection");
  half_cmd->fallthrough();
  long long fh_n = 0, fh_m = 0;
  half_cmd->add_option("--n", fh_n, "cover degree (>= 3)")->required();
  half_cmd->add_option("--m", fh_m, "dimension (>= 3)")->required();

  auto* recipe_cmd = family_cmd->add_subcommand(
      "recipe", "all configurations at one (m, n, s, N) cell of a behavior criterion");
  recipe_cmd->fallthrough();
  std::string rc_criterion, rc_family;
  long long rc_m = 0, rc_n = 0, rc_s = 0, rc_N = 0, rc_k = 2, rc_l = 2;
  recipe_cmd->add_option("--criterion", rc_criterion, "emb-a|emb-b|bir|preserved|halving")
      ->required();
  recipe_cmd->add_option("--family", rc_family, "cyclic|znz2")->required();
  recipe_cmd->add_option("--m", rc_m, "dimension")->required();
  recipe_cmd->add_option("--n", rc_n, "cyclic factor order")->required();
  recipe_cmd->add_option("--s", rc_s, "subcanonicity")->required();
  recipe_cmd->add_option("--ambient", rc_N, "ambient projective dimension N")->required();
  recipe_cmd->add_option("--k", rc_k, "cyclic twist (default 2)");
  recipe_cmd->add_option("--l", rc_l, "double-cover twist (default 2, znz2 only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    QueryInfo query;
    std::vector<OutputRow> rows;
    bool with_certificates = false;

    if (classify_cmd->parsed() || invariants_cmd->parsed()) {
      const CoverArgs& args = classify_cmd->parsed() ? classify_args : invariants_args;
      const auto [ci, spec] = args.build();
      query.command = classify_cmd->parsed() ? "classify" : "invariants";
      query.params = {{"ambient", std::to_string(args.ambient)},
                      {"degrees", [&] {
                         std::string t;
                         for (std::size_t i = 0; i < args.degrees.size(); ++i)
                           t += (i ? "," : "") + std::to_string(args.degrees[i]);
                         return t;
                       }()},
                      {"cover", args.cover}};
      rows.push_back(single_row(ci, spec, SolveOptions{}));
      with_certificates = classify_cmd->parsed();
    } else if (ci_check_cmd->parsed()) {
      const auto [ci, spec] = ci_check_args.build();
      SolveOptions solve;
      solve.min_part = static_cast<int>(min_part);
      solve.node_budget = budget;
      query.command = "ci-check";
      query.params = {{"ambient", std::to_string(ci_check_args.ambient)},
                      {"cover", ci_check_args.cover},
                      {"min_part", std::to_string(min_part)},
                      {"budget", std::to_string(budget)}};
      rows.push_back(single_row(ci, spec, solve));
    } else if (enumerate_cmd->parsed()) {
      EnumFilter filter;
      filter.family = parse_family(en_family);
      filter.behavior = parse_behavior(en_behavior);
      filter.m_range = parse_range(en_m_range);
      filter.s_range = parse_range(en_s_range);
      if (enumerate_cmd->count("--k")) filter.k = en_k;
      if (enumerate_cmd->count("--l")) filter.l = en_l;
      query.command = "enumerate";
      query.params = {{"family", en_family},
                      {"behavior", en_behavior},
                      {"m", en_m_range},
                      {"s", en_s_range}};
      if (filter.k) query.params.push_back({"k", std::to_string(*filter.k)});
      if (filter.l) query.params.push_back({"l", std::to_string(*filter.l)});
      for (const EnumRow& row : enumerate_to_vector(filter))
        rows.push_back(make_output_row(row));
    } else if (codim3_cmd->parsed()) {
      query.command = "family codim3";
      query.params = {{"k", std::to_string(f_k)}};
      rows.push_back(family_row(family_codim3_limit1(f_k)));
    } else if (rational_cmd->parsed()) {
      query.command = "family rational";
      query.params = {{"a", std::to_string(fr_a)},
                      {"b", std::to_string(fr_b)},
                      {"k", std::to_string(fr_k)},
                      {"l", std::to_string(fr_l)}};
      rows.push_back(family_row(family_rational_limit(fr_a, fr_b, fr_k, fr_l)));
    } else if (half_cmd->parsed()) {
      query.command = "family half";
      query.params = {{"n", std::to_string(fh_n)}, {"m", std::to_string(fh_m)}};
      rows.push_back(family_row(family_half_limit(fh_n, fh_m)));
    } else if (recipe_cmd->parsed()) {
      RecipeQuery q;
      q.criterion = parse_behavior(rc_criterion);
      q.family = parse_family(rc_family);
      q.m = rc_m;
      q.n = rc_n;
      q.s = rc_s;
      q.N = rc_N;
      q.k = rc_k;
      q.l = rc_l;
      query.command = "family recipe";
      query.params = {{"criterion", rc_criterion}, {"family", rc_family},
                      {"m", std::to_string(rc_m)},  {"n", std::to_string(rc_n)},
                      {"s", std::to_string(rc_s)},  {"N", std::to_string(rc_N)},
                      {"k", std::to_string(rc_k)},  {"l", std::to_string(rc_l)}};
      for (const EnumRow& row : family_recipe(q)) rows.push_back(make_output_row(row));
    }

    return emit(format, out_path, query, rows, with_certificates);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
