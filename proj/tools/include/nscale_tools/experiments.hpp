#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nscale/csv.hpp"
#include "nscale_tools/config.hpp"

namespace nscale::tools {

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Result of one experiment run. Everything in it except wall_seconds is a
/// pure function of the config (seed included).
struct RunReport {
  std::string experiment;
  std::map<std::string, std::string> config;
  CsvTable table{{"empty"}};
  std::vector<Assertion> assertions;
  double wall_seconds = 0.0;

  bool passed() const;
  void check(std::string name, bool ok, std::string detail = "");
  /// Table with the config echo and assertion verdicts as '#' lines.
  CsvTable to_csv() const;
};

struct Experiment {
  std::string name;
  std::string summary;
  std::map<std::string, std::string> defaults;
  std::function<RunReport(const Config&)> run;
};

const std::vector<Experiment>& experiments();
/// Throws ConfigError for unknown names.
const Experiment& find_experiment(const std::string& name);

/// Builds the config (defaults, then file, then overrides, then seed) and
/// runs the experiment, timing it.
RunReport run_experiment(const Experiment& e, const std::string& config_path,
                         const std::vector<std::string>& overrides, const std::string& seed = "");

RunReport run_axioms(const Config& cfg);
RunReport run_paths(const Config& cfg);
RunReport run_packet(const Config& cfg);
RunReport run_detector_sweep(const Config& cfg);
RunReport run_gauge_check(const Config& cfg);
RunReport run_commerce_demo(const Config& cfg);

}  // namespace nscale::tools
