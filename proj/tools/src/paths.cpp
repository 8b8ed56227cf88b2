#include <algorithm>
#include <cmath>
#include <random>

#include "nscale/gauge_paths.hpp"
#include "nscale/numeric.hpp"
#include "nscale_tools/experiments.hpp"
#include "specs.hpp"

namespace nscale::tools {

namespace {

Point random_point(std::mt19937_64& gen, const Box& box) {
  Point p(box.dim());
  for (int i = 0; i < box.dim(); ++i) {
    std::uniform_real_distribution<double> u(box.lo[i], box.hi[i]);
    p[i] = u(gen);
  }
  return p;
}

}  // namespace

RunReport run_paths(const Config& cfg) {
  const int dim = dim_from(cfg);
  const Box region = grid_from(cfg).box();
  const GaugeFieldSpec field = field_from(cfg, "field", dim);
  const int steps = cfg.integer("paths.steps");
  const int pairs = cfg.integer("paths.pairs");
  const int loops = cfg.integer("paths.loops");
  const double side = cfg.num("paths.loop_side");
  const double tol = cfg.num("paths.tol");
  if (steps < 1 || pairs < 1 || loops < 0) throw ConfigError("paths.steps and paths.pairs must be positive");
  if (!(side > 0.0)) throw ConfigError("paths.loop_side must be positive");

  RunReport report;
  report.table = CsvTable({"check", "label", "value", "error"});
  auto gen = std::mt19937_64(cfg.natural("seed"));

  double worst_recip = 0.0, worst_concat = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const Point x = random_point(gen, region);
    const Point y = random_point(gen, region);
    const Point z = random_point(gen, region);
    if (x == y || y == z) continue;
    const double there = straight_line_scale(field, x, y, steps).value;
    const double back = straight_line_scale(field, y, x, steps).value;
    const double recip = std::abs(there * back - 1.0);
    worst_recip = std::max(worst_recip, recip);
    report.table.add_row({"reciprocity", std::to_string(k), format_double(there * back), format_double(recip)});

    const auto xy = PolylinePath::make({x, y});
    const auto yz = PolylinePath::make({y, z});
    const double joined = path_scale(field, xy.then(yz), steps).value;
    const double product = path_scale(field, xy, steps).value * path_scale(field, yz, steps).value;
    const double concat = std::abs(joined - product) / joined;
    worst_concat = std::max(worst_concat, concat);
    report.table.add_row({"concatenation", std::to_string(k), format_double(joined), format_double(concat)});
  }
  report.check("reciprocity", worst_recip <= 1e-12, "max=" + format_double(worst_recip));
  report.check("concatenation", worst_concat <= 1e-12, "max=" + format_double(worst_concat));

  // Midpoint rule on the region diagonal against a fine Gauss-Legendre reference.
  const double reference = segment_integral(field, region.lo, region.hi, 256, QuadratureRule::gauss_legendre);
  std::vector<double> hs, errs;
  for (int n : {4, 8, 16, 32, 64}) {
    const double value = segment_integral(field, region.lo, region.hi, n);
    hs.push_back(1.0 / n);
    errs.push_back(std::abs(value - reference));
    report.table.add_row({"quadrature", "steps=" + std::to_string(n), format_double(value), format_double(errs.back())});
  }
  const double scale = std::max(1.0, std::abs(reference));
  const bool exact = *std::max_element(errs.begin(), errs.end()) <= 1e-13 * scale;
  const double order = exact ? 0.0 : fit_order(hs, errs);
  report.table.add_row({"quadrature", "order", format_double(order), exact ? "exact" : ""});
  report.check("quadrature_order", exact || order >= cfg.num("paths.min_order"),
               exact ? "exact" : "order=" + format_double(order));

  if (dim >= 2) {
    for (int i = 0; i < loops; ++i) {
      for (int j = 0; j < loops; ++j) {
        Point corner = region.lo;
        corner[0] += i * side;
        corner[1] += j * side;
        if (corner[0] + side > region.hi[0] || corner[1] + side > region.hi[1]) continue;
        const double res = loop_residual(field, PolylinePath::square_loop(corner, side, 0, 1), steps);
        report.table.add_row({"loop", point_text(corner), format_double(res), ""});
      }
    }
  }

  const auto verdict = integrability_check(field, region, side, tol, 16, QuadratureRule::gauss_legendre);
  report.table.add_row({"integrability", verdict.integrable ? "integrable" : "non-integrable",
                        format_double(verdict.max_residual), std::to_string(verdict.loops_checked)});
  const bool expect_integrable = field.kind() != FieldKind::rotational || field.coupling() * field.strength() == 0.0;
  report.check("integrability_verdict", verdict.integrable == expect_integrable,
               verdict.integrable ? "integrable" : "non-integrable");
  return report;
}

}  // namespace nscale::tools
