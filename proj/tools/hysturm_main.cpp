#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hysturm/run.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hysturm: two-electron spectra in a hyperspherical Sturmian basis"};
  app.require_subcommand(1);

  std::string config_path, out_path, report_path, table_id, tables_dir = "data/tables";

  auto* run = app.add_subcommand("run", "execute a run configuration");
  run->add_option("config", config_path, "JSON run configuration")->required();
  run->add_option("--out", out_path, "machine-readable report file");

  auto* cmp = app.add_subcommand("compare", "compare a report with a reference table");
  cmp->add_option("report", report_path, "report file from `run`")->required();
  cmp->add_option("table", table_id, "table id (e.g. table2) or JSON path")->required();
  cmp->add_option("--tables-dir", tables_dir, "directory with reference tables");

  auto* plot = app.add_subcommand("plotdata", "emit plot columns");
  plot->add_option("config", config_path, "JSON plot configuration")->required();
  plot->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      std::string summary;
      const auto report = hysturm::run_config(slurp(config_path), &summary);
      const std::string text = report.to_text();
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
        std::cout << "report written to " << out_path << "\n";
      }
      std::cout << summary;
      return 0;
    }
    if (cmp->parsed()) {
      const auto report = hysturm::Report::from_text(slurp(report_path));
      std::string table_path = table_id;
      if (table_id.find('/') == std::string::npos &&
          table_id.find(".json") == std::string::npos)
        table_path = tables_dir + "/" + table_id + ".json";
      bool ok = false;
      for (const auto& line :
           hysturm::compare_report(report, slurp(table_path), &ok))
        std::cout << line << "\n";
      std::cout << (ok ? "ALL PASS" : "COMPARISON FAILED") << "\n";
      return ok ? 0 : 1;
    }
    if (plot->parsed()) {
      const std::string text = hysturm::plotdata(slurp(config_path));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
