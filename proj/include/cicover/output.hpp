#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cicover/enumerate.hpp"

namespace cicover {

enum class OutputFormat { Markdown, Csv, Json };

OutputFormat parse_format(const std::string& name);  // "md" | "csv" | "json"

// One rendered result row; identical values feed all three formats.
struct OutputRow {
  long long m = 0;
  long long n_total = 0;             // actual cover degree (JSON)
  long long n_table = 0;             // cyclic factor order (markdown/CSV column n)
  std::optional<long long> k;
  std::optional<long long> l;
  long long N = 0;
  long long s = 0;
  std::vector<int> multidegree;
  Int Lm;
  Int Km;
  Int pg;
  std::vector<std::string> behaviors;
  std::string summary;
  std::string ci_status;
  std::string obstruction;
  // Assumption/context flags.
  bool surface_mode = false;
  bool complete_series = false;
  bool assumes_generic_branch = true;  // smoothness of X assumes generic branch divisors
  std::string type_flag;
  std::vector<std::string> certificates;  // human-readable witness lines
};

OutputRow make_output_row(const CompleteIntersection& ci, const CoverSpec& spec,
                          const CoverAnalysis& analysis, const Verdict& verdict,
                          const CIObstruction& obstruction);
OutputRow make_output_row(const EnumRow& row);

// "24*3^10", "-1920*2^25", plain "24"/"-24" when |s| == 1, "0" when s == 0.
std::string km_factored_string(long long s, long long m, const Int& Lm);

struct QueryInfo {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order
};

// Markdown: query echo, aligned table (m n k l N s d K^m p_g), then summary /
// CI-status / obstruction lines and optional certificate lines per row.
void write_markdown(std::ostream& os, const QueryInfo& query,
                    const std::vector<OutputRow>& rows, bool with_certificates);

// Fixed header: m,n,k,l,N,s,multidegree,Lm,Km,pg,summary,ci_status,obstruction
// (multidegree space-separated; absent k/l empty).
void write_csv(std::ostream& os, const std::vector<OutputRow>& rows);

// {"query": {...}, "rows": [...]}; big integers as decimal strings; key order
// fixed so emitted text round-trips byte-identically through a JSON parser.
void write_json(std::ostream& os, const QueryInfo& query,
                const std::vector<OutputRow>& rows);

void write_rows(std::ostream& os, OutputFormat fmt, const QueryInfo& query,
                const std::vector<OutputRow>& rows, bool with_certificates);

}  // namespace cicover
