// nscale: run one experiment and write its CSV.
//
//   nscale <experiment> [--config PATH] [--out PATH] [--seed N] [--set KEY=VALUE]...
//
// Exit codes: 0 all assertions pass, 1 an assertion failed, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nscale_tools/experiments.hpp"

namespace {

constexpr int kConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace nscale::tools;

  CLI::App app{"Scaled number structures: experiment runner"};
  app.require_subcommand(1);
  std::string config_path, out_path, seed;
  std::vector<std::string> overrides;
  bool list_keys = false;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--out", out_path, "CSV output file (default: stdout)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--set", overrides, "override one config key, KEY=VALUE")->take_all();
  app.add_flag("--list-keys", list_keys, "print the experiment's config keys with defaults and exit");

  for (const auto& e : experiments()) app.add_subcommand(e.name, e.summary)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  const Experiment& experiment = find_experiment(app.get_subcommands().front()->get_name());
  if (list_keys) {
    for (const auto& [k, v] : experiment.defaults) std::cout << k << "=" << v << "\n";
    return 0;
  }

  RunReport report;
  try {
    report = run_experiment(experiment, config_path, overrides, seed);
  } catch (const ConfigError& e) {
    std::cerr << "nscale " << experiment.name << ": " << e.what() << "\n";
    return kConfigError;
  }

  const std::string csv = report.to_csv().str();
  std::ostream* summary = &std::cout;
  if (out_path.empty()) {
    std::cout << csv;
    summary = &std::cerr;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << csv) || !out.flush()) {
      std::cerr << "nscale: cannot write '" << out_path << "'\n";
      return kConfigError;
    }
  }

  for (const auto& a : report.assertions) {
    *summary << (a.passed ? "pass " : "FAIL ") << a.name;
    if (!a.detail.empty()) *summary << " (" << a.detail << ")";
    *summary << "\n";
  }
  char line[128];
  std::snprintf(line, sizeof line, "%s: %s in %.3f s\n", report.experiment.c_str(),
                report.passed() ? "pass" : "FAIL", report.wall_seconds);
  *summary << line;
  return report.passed() ? 0 : 1;
}
