#include <cmath>

#include "nscale/quantum_scaling.hpp"
#include "nscale_tools/experiments.hpp"
#include "specs.hpp"

namespace nscale::tools {

namespace {

// quantity, index, one coordinate column per axis, re, im
std::vector<std::string> row(const std::string& quantity, std::size_t index, int dim, const Point* where,
                             double re, double im) {
  std::vector<std::string> cells{quantity, std::to_string(index)};
  for (int a = 0; a < dim; ++a) cells.push_back(where ? format_double((*where)[a]) : "");
  cells.push_back(format_double(re));
  cells.push_back(format_double(im));
  return cells;
}

}  // namespace

RunReport run_packet(const Config& cfg) {
  const Grid grid = grid_from(cfg);
  const int dim = grid.dim();
  const GaugeFieldSpec field = field_from(cfg, "field", dim);
  const WavePacket psi = packet_from(cfg, grid);
  const Quadrature quad = quadrature_from(cfg);
  const Point x0 = point_from(cfg, "packet.anchor", dim);
  const Point vlo = point_from(cfg, "packet.volume.lo", dim);
  const Point vhi = point_from(cfg, "packet.volume.hi", dim);
  for (int a = 0; a < dim; ++a) {
    if (!(vhi[a] > vlo[a])) throw ConfigError("packet.volume.hi must exceed packet.volume.lo on every axis");
  }
  const Box volume = make_box(vlo, vhi);

  std::vector<std::string> header{"quantity", "index"};
  for (int a = 0; a < dim; ++a) header.push_back("x" + std::to_string(a));
  header.push_back("re");
  header.push_back("im");
  RunReport report;
  report.table = CsvTable(header);

  const Point standard = standard_expectation(psi);
  const auto raw = position_expectation_scaled(psi, field, x0, ExpectationMode::raw, quad);
  const auto norm = position_expectation_scaled(psi, field, x0, ExpectationMode::normalized, quad);
  for (int a = 0; a < dim; ++a) {
    const auto i = static_cast<std::size_t>(a);
    report.table.add_row(row("standard_mean", i, dim, nullptr, standard[a], 0.0));
    report.table.add_row(row("scaled_mean_raw", i, dim, nullptr, raw.value[a], 0.0));
    report.table.add_row(row("scaled_mean_normalized", i, dim, nullptr, norm.value[a], 0.0));
  }
  report.table.add_row(row("scaled_norm", 0, dim, nullptr, raw.scaled_norm, 0.0));

  if (field.coupling() == 0.0 || field.kind() == FieldKind::zero) {
    report.check("reduces_to_standard", norm.value == standard && scaled_packet(psi, field, x0, quad) == psi);
  }

  // Anchor pairs: the low corner against the high corner and the centre of
  // each high face.
  std::vector<Point> anchors{volume.hi};
  for (int a = 0; a < dim; ++a) {
    Point c(dim);
    for (int b = 0; b < dim; ++b) c[b] = 0.5 * (volume.lo[b] + volume.hi[b]);
    c[a] = volume.hi[a];
    if (!(c == volume.hi)) anchors.push_back(c);
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    const double res = anchor_relation_check(psi, field, volume, volume.lo, anchors[k], quad);
    worst = std::max(worst, res);
    report.table.add_row(row("anchor_residual", k, dim, &anchors[k], res, 0.0));
  }
  report.check("anchor_relation", worst <= cfg.num("packet.anchor_tol"), "max=" + format_double(worst));

  if (cfg.flag("packet.dump")) {
    const WavePacket scaled = scaled_packet(psi, field, x0, quad);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      const Point p = grid.point(i);
      report.table.add_row(row("scaled_amp", i, dim, &p, scaled[i].real(), scaled[i].imag()));
    }
  }
  return report;
}

}  // namespace nscale::tools
