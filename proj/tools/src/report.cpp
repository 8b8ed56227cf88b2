#include <chrono>

#include "nscale/error.hpp"
#include "nscale_tools/experiments.hpp"

namespace nscale::tools {

bool RunReport::passed() const {
  for (const auto& a : assertions) {
    if (!a.passed) return false;
  }
  return true;
}

void RunReport::check(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail)});
}

CsvTable RunReport::to_csv() const {
  CsvTable out = table;
  out.add_comment("experiment=" + experiment);
  for (const auto& [k, v] : config) out.add_comment(k + "=" + v);
  for (const auto& a : assertions) {
    std::string line = "assert " + a.name + " " + (a.passed ? "pass" : "fail");
    if (!a.detail.empty()) line += " " + a.detail;
    out.add_comment(line);
  }
  return out;
}


const Experiment& find_experiment(const std::string& name) {
  for (const auto& e : experiments()) {
    if (e.name == name) return e;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

RunReport run_experiment(const Experiment& e, const std::string& config_path,
                         const std::vector<std::string>& overrides, const std::string& seed) {
  Config cfg(e.defaults);
  if (!config_path.empty()) cfg.load_file(config_path);
  for (const auto& o : overrides) cfg.apply_override(o);
  if (!seed.empty()) cfg.set("seed", seed);
  cfg.natural("seed");

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    report = e.run(cfg);
  } catch (const UsageError& err) {
    throw ConfigError(err.what());
  } catch (const DomainError& err) {
    throw ConfigError(err.what());
  } catch (const IntegrabilityError& err) {
    throw ConfigError(std::string("refused: ") + err.what());
  }
  report.experiment = e.name;
  report.config = cfg.values();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nscale::tools
