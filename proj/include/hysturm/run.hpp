#pragma once

#include <string>
#include <vector>

namespace hysturm {

/// One row of the machine-readable report: a row type tag, a key unique
/// within the type, numeric columns and an optional trailing label.
struct ReportRow {
  std::string type;
  std::string key;
  std::vector<double> values;
  std::string label;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> meta;  // "# key<TAB>value"
  std::vector<ReportRow> rows;

  std::string to_text() const;
  static Report from_text(const std::string& text);
  const ReportRow* find(const std::string& type, const std::string& key) const;
};

/// Execute the pipeline described by a JSON configuration (see README for
/// the grammar). `summary`, when non-null, receives the human-readable log.
Report run_config(const std::string& config_json, std::string* summary = nullptr);

/// Compare a report against a bundled reference table (JSON). Returns the
/// per-row result lines; `all_pass` reports the verdict.
std::vector<std::string> compare_report(const Report& report,
                                        const std::string& table_json,
                                        bool* all_pass);

/// Columns for the potential / basis-function / eigenvalue plots.
std::string plotdata(const std::string& config_json);

}  // namespace hysturm
