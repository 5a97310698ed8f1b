#include "cicover/output.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cicover/errors.hpp"

namespace cicover {

OutputFormat parse_format(const std::string& name) {
  if (name == "md") return OutputFormat::Markdown;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  fail(Violation::BadArgument, "format '" + name + "' (expected md, csv or json)");
}

std::string km_factored_string(long long s, long long m, const Int& Lm) {
  if (s == 0) return "0";
  const bool negative = s < 0 && m % 2 != 0;
  const Int coeff = negative ? Int(-Lm) : Lm;
  const long long base = s < 0 ? -s : s;
  if (base == 1) return coeff.str();
  return coeff.str() + "*" + std::to_string(base) + "^" + std::to_string(m);
}

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string cert_line(const DegreePreservedCert& c) {
  std::ostringstream os;
  os << "DegreePreserved: d_r = " << c.d_top << " < smallest twist " << c.k_min;
  return os.str();
}

std::string cert_line(const BirationalCert& c) {
  std::ostringstream os;
  os << "Birational: d_" << c.index << " = " << c.d_at_index << " >= largest twist "
     << c.k_top;
  return os.str();
}

std::string cert_line(const EmbeddingACert& c) {
  std::ostringstream os;
  os << "EmbeddingA: twists matched at degree indices (" << join_ints(c.indices, " ")
     << ")";
  return os.str();
}

std::string cert_line(const EmbeddingBCert& c) {
  std::ostringstream os;
  os << "EmbeddingB: d_" << c.index << " = " << c.d_at_index << " >= largest twist "
     << c.k_top << " (index 2r+2-n-N = " << c.index << ")";
  return os.str();
}

std::string cert_line(const HalvingCert& c) {
  std::ostringstream os;
  os << "HalvesDegree: outer min twist " << c.outer_min << " > max(2l, d_r) = "
     << std::max(2 * c.inner_l, c.d_top) << " and d_r = " << c.d_top
     << " >= l = " << c.inner_l;
  if (c.smooth_image)
    os << "; smooth image via rule " << c.smooth_rule << " (degree index "
       << c.smooth_index << ")";
  else
    os << "; image smoothness not certified";
  return os.str();
}

std::vector<std::string> certificate_lines(const Verdict& v) {
  std::vector<std::string> lines;
  if (v.degree_preserved) lines.push_back(cert_line(*v.degree_preserved));
  if (v.birational) lines.push_back(cert_line(*v.birational));
  if (v.embedding_a) lines.push_back(cert_line(*v.embedding_a));
  if (v.embedding_b) lines.push_back(cert_line(*v.embedding_b));
  if (v.halving) lines.push_back(cert_line(*v.halving));
  return lines;
}

struct SpecShape {
  long long n_table = 0;
  std::optional<long long> k, l;
};

SpecShape spec_shape(const CoverSpec& spec) {
  SpecShape sh;
  if (const auto* c = std::get_if<SimpleCyclic>(&spec)) {
    sh.n_table = c->n;
    sh.k = c->k;
  } else if (const auto* p = std::get_if<CyclicProduct>(&spec)) {
    if (p->factors.size() == 2 && p->factors[1].n == 2) {
      sh.n_table = p->factors[0].n;
      sh.k = p->factors[0].k;
      sh.l = p->factors[1].k;
    } else {
      sh.n_table = cover_degree(spec);
    }
  } else {
    sh.n_table = cover_degree(spec);
  }
  return sh;
}

}  // namespace

OutputRow make_output_row(const CompleteIntersection& ci, const CoverSpec& spec,
                          const CoverAnalysis& analysis, const Verdict& verdict,
                          const CIObstruction& obstruction) {
  OutputRow row;
  row.m = analysis.m;
  row.n_total = analysis.deg;
  const SpecShape sh = spec_shape(spec);
  row.n_table = sh.n_table;
  row.k = sh.k;
  row.l = sh.l;
  row.N = ci.N;
  row.s = analysis.s;
  row.multidegree = ci.degrees;
  row.Lm = analysis.Lm;
  row.Km = analysis.Km;
  row.pg = analysis.pg;
  row.behaviors = verdict.behavior_names();
  row.summary = summary_name(verdict.summary);
  row.ci_status = ci_status_string(verdict.ci_status);
  row.obstruction = obstruction.to_string();
  row.surface_mode = ci.surface_mode();
  row.complete_series = analysis.complete_series;
  row.type_flag = type_flag_name(analysis.type_flag);
  row.certificates = certificate_lines(verdict);
  return row;
}

OutputRow make_output_row(const EnumRow& row) {
  OutputRow out =
      make_output_row(row.ci, row.spec, row.analysis, row.verdict, row.obstruction);
  out.n_table = row.n;  // the sweep's cyclic factor order
  out.k = row.k;
  if (row.family == CoverFamily::ZnZ2) out.l = row.l;
  return out;
}

void write_markdown(std::ostream& os, const QueryInfo& query,
                    const std::vector<OutputRow>& rows, bool with_certificates) {
  os << "# cicover " << query.command << "\n";
  if (!query.params.empty()) {
    os << "#";
    for (const auto& [key, value] : query.params) os << " " << key << "=" << value;
    os << "\n";
  }
  os << "\n";
  const std::vector<std::string> header = {"m", "n", "k", "l", "N",
                                           "s", "d", "K^m", "p_g"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& r : rows) {
    const std::string expanded = r.Km.str();
    const std::string factored = km_factored_string(r.s, r.m, r.Lm);
    cells.push_back({std::to_string(r.m), std::to_string(r.n_table),
                     r.k ? std::to_string(*r.k) : "-", r.l ? std::to_string(*r.l) : "-",
                     std::to_string(r.N), std::to_string(r.s),
                     "(" + join_ints(r.multidegree, ",") + ")",
                     expanded == factored ? expanded : expanded + " = " + factored,
                     r.pg.str()});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    os << "|";
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << " " << row[c] << std::string(width[c] - row[c].size(), ' ') << " |";
    }
    os << "\n";
  };
  print_row(header);
  os << "|";
  for (std::size_t c = 0; c < header.size(); ++c)
    os << std::string(width[c] + 1, '-') << ":|";
  os << "\n";
  for (const auto& row : cells) print_row(row);
  os << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "# row " << (i + 1) << ": summary=" << r.summary
       << " ci_status=" << r.ci_status << " obstruction=" << r.obstruction
       << " type=" << r.type_flag
       << " series=" << (r.complete_series ? "complete" : "incomplete");
    if (r.surface_mode) os << " surface-mode";
    os << "\n";
    if (with_certificates)
      for (const auto& line : r.certificates) os << "#   " << line << "\n";
  }
}

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows) {
  os << "m,n,k,l,N,s,multidegree,Lm,Km,pg,summary,ci_status,obstruction\n";
  for (const auto& r : rows) {
    os << r.m << "," << r.n_table << "," << (r.k ? std::to_string(*r.k) : "") << ","
       << (r.l ? std::to_string(*r.l) : "") << "," << r.N << "," << r.s << ","
       << join_ints(r.multidegree, " ") << "," << r.Lm.str() << "," << r.Km.str()
       << "," << r.pg.str() << "," << r.summary << "," << r.ci_status << ","
       << r.obstruction << "\n";
  }
}

void write_json(std::ostream& os, const QueryInfo& query,
                const std::vector<OutputRow>& rows) {
  nlohmann::ordered_json doc;
  doc["query"]["command"] = query.command;
  for (const auto& [key, value] : query.params) doc["query"][key] = value;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["m"] = r.m;
    o["n_total"] = r.n_total;
    if (r.k) o["k"] = *r.k; else o["k"] = nullptr;
    if (r.l) o["l"] = *r.l; else o["l"] = nullptr;
    o["N"] = r.N;
    o["s"] = r.s;
    o["multidegree"] = r.multidegree;
    o["Lm"] = r.Lm.str();
    o["Km"] = r.Km.str();
    o["pg"] = r.pg.str();
    o["behaviors"] = r.behaviors;
    o["summary"] = r.summary;
    o["ci_status"] = r.ci_status;
    o["obstruction"] = r.obstruction;
    o["flags"] = {{"surface_mode", r.surface_mode},
                  {"complete_series", r.complete_series},
                  {"assumes_generic_branch", r.assumes_generic_branch},
                  {"type", r.type_flag}};
    doc["rows"].push_back(std::move(o));
  }
  os << doc.dump(2) << "\n";
}

void write_rows(std::ostream& os, OutputFormat fmt, const QueryInfo& query,
                const std::vector<OutputRow>& rows, bool with_certificates) {
  switch (fmt) {
    case OutputFormat::Markdown: write_markdown(os, query, rows, with_certificates); break;
    case OutputFormat::Csv: write_csv(os, rows); break;
    case OutputFormat::Json: write_json(os, query, rows); break;
  }
}

}  // namespace cicover
