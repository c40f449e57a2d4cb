// Command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eala/eala_c.h"

namespace {

int emit(eala_report* r, const std::string& out_path, bool text) {
  std::string body = text && *eala_report_text(r) ? eala_report_text(r) : eala_report_json(r);
  int code = eala_report_status(r) == EALA_OK ? 0 : 1;
  eala_report_destroy(r);
  if (out_path.empty()) {
    std::cout << body;
    return code;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  f << body;
  return code;
}

int report_error(eala_status s) {
  std::cerr << "error: " << eala_last_error() << "\n";
  return s == EALA_INPUT_ERROR ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  // EALA_SEED is reserved for future use and deliberately not read: no result depends on randomness.
  CLI::App app{"Affinization checks for extended affine Lie algebras and their root systems"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  long window = 0;
  bool timing = false;
  auto* run = app.add_subcommand("run", "run the checks of a scenario file");
  run->add_option("--scenario", scenario_path, "scenario JSON file (one object or an array)")->required();
  run->add_option("--window", window, "override the degree window N")->check(CLI::Range(1, 8));
  run->add_option("--out", out_path, "write the JSON report here instead of stdout");
  run->add_flag("--timing", timing, "add wall-clock timings (output is then not reproducible)");

  std::string kind;
  int max_rank = 8;
  std::string format = "json";
  auto* table = app.add_subcommand("table", "verdict table over all affine types");
  table->add_option("--kind", kind, "table kind")->required()->check(CLI::IsMember({"theorem48"}));
  table->add_option("--max-rank", max_rank, "largest rank l (matrices have l + 1 nodes)")->check(CLI::Range(1, 8));
  table->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  table->add_option("--out", out_path, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*run) {
    std::ifstream f(scenario_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot read " << scenario_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    eala_report* r = nullptr;
    eala_status s = eala_run_scenarios(buf.str().c_str(), window, timing ? 1 : 0, &r);
    if (!r) return report_error(s);
    return emit(r, out_path, false);
  }
  eala_report* r = nullptr;
  eala_status s = eala_theorem48_table(max_rank, &r);
  if (!r) return report_error(s);
  return emit(r, out_path, format == "text");
}
