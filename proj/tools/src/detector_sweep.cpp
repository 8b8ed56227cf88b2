#include <cmath>

#include "nscale/detector.hpp"
#include "nscale/numeric.hpp"
#include "nscale_tools/experiments.hpp"
#include "specs.hpp"

namespace nscale::tools {

namespace {

double distance_to(const Point& a, const Point& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

RunReport run_detector_sweep(const Config& cfg) {
  const Grid grid = grid_from(cfg);
  const int dim = grid.dim();
  const GaugeFieldSpec field = field_from(cfg, "field", dim);
  const WavePacket psi = packet_from(cfg, grid);
  const Quadrature quad = quadrature_from(cfg);
  const auto deltas = cfg.list("detector.deltas");
  if (deltas.empty()) throw ConfigError("detector.deltas must list at least one cube size");
  AnchorRule rule{};
  try {
    rule = anchor_rule_from_string(cfg.str("detector.anchor"));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("detector.anchor: ") + e.what());
  }
  const std::string& mode_name = cfg.str("detector.mode");
  if (mode_name != "raw" && mode_name != "normalized") throw ConfigError("detector.mode must be raw or normalized");
  const ExpectationMode mode = mode_name == "raw" ? ExpectationMode::raw : ExpectationMode::normalized;

  std::vector<std::string> header{"delta", "cubes", "error"};
  for (int a = 0; a < dim; ++a) header.push_back("mean" + std::to_string(a));
  header.push_back("scaled_norm");
  RunReport report;
  report.table = CsvTable(header);

  // Standard expectation evaluated in the same mode, so zero coupling gives zero error.
  const Point standard = position_expectation_scaled(psi, GaugeFieldSpec::zero(dim), grid.box().lo, mode).value;
  auto add = [&](double delta, const DetectorPartition& p, const ScaledExpectation& e, double err) {
    std::vector<std::string> cells{format_double(delta), std::to_string(p.cube_count()), format_double(err)};
    for (int a = 0; a < dim; ++a) cells.push_back(format_double(e.value[a]));
    cells.push_back(format_double(e.scaled_norm));
    report.table.add_row(cells);
  };

  // One cube covering the grid, compared with the packet scaled from that cube's anchor.
  const double side = grid.length(0);
  bool cubic = true;
  for (int a = 1; a < dim; ++a) cubic = cubic && grid.length(a) == side && grid.n(a) == grid.n(0);
  if (cubic) {
    const auto whole = DetectorPartition::make(grid, side, rule);
    const auto e = detector_expectation(psi, field, whole, mode, quad);
    const auto ref = position_expectation_scaled(psi, field, whole.anchor(0), mode, quad);
    const double gap = distance_to(e.value, ref.value);
    add(side, whole, e, distance_to(e.value, standard));
    const double scale = std::max(1.0, distance_to(ref.value, Point(dim)));
    report.check("whole_volume", gap <= cfg.num("detector.whole_tol") * scale, "gap=" + format_double(gap));
  }

  std::vector<double> errs;
  for (double delta : deltas) {
    const auto p = DetectorPartition::make(grid, delta, rule);
    const auto e = detector_expectation(psi, field, p, mode, quad);
    errs.push_back(distance_to(e.value, standard));
    add(delta, p, e, errs.back());
  }

  bool all_zero = true;
  for (double e : errs) all_zero = all_zero && e == 0.0;
  bool monotone = true;
  for (std::size_t i = 1; i < errs.size(); ++i) monotone = monotone && errs[i] < errs[i - 1];
  if (all_zero) {
    report.check("convergence", true, "exact");
  } else if (deltas.size() < 2) {
    report.check("convergence", true, "single cube size");
  } else {
    const double order = fit_order(deltas, errs);
    report.check("monotone", monotone);
    report.check("convergence", order >= cfg.num("detector.min_order"), "order=" + format_double(order));
  }
  return report;
}

}  // namespace nscale::tools
