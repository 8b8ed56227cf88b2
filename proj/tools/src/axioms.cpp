#include "nscale/law_suite.hpp"
#include "nscale_tools/experiments.hpp"

namespace nscale::tools {

RunReport run_axioms(const Config& cfg) {
  LawSuiteOptions opts;
  opts.seed = cfg.natural("seed");
  opts.cases = cfg.natural("axioms.cases");
  opts.r_min = cfg.num("axioms.r_min");
  opts.r_max = cfg.num("axioms.r_max");
  opts.magnitude_min = cfg.num("axioms.magnitude_min");
  opts.magnitude_max = cfg.num("axioms.magnitude_max");
  opts.fixed_scales = cfg.list("axioms.scales");
  if (opts.cases == 0) throw ConfigError("axioms.cases must be positive");
  if (!(opts.r_min > 0.0) || !(opts.r_max >= opts.r_min)) throw ConfigError("need 0 < axioms.r_min <= axioms.r_max");
  if (!(opts.magnitude_min > 0.0) || !(opts.magnitude_max >= opts.magnitude_min)) {
    throw ConfigError("need 0 < axioms.magnitude_min <= axioms.magnitude_max");
  }
  for (double r : opts.fixed_scales) {
    if (!(r > 0.0)) throw ConfigError("axioms.scales entries must be positive");
  }
  const double tol = cfg.num("axioms.tol");
  const double analytic_tol = cfg.num("axioms.analytic_tol");
  const int max_degree = cfg.integer("axioms.max_degree");
  if (max_degree < 0) throw ConfigError("axioms.max_degree must not be negative");

  RunReport report;
  report.table = CsvTable({"law", "cases", "max_rel_error", "tolerance"});
  for (const auto& law : run_field_law_suite(opts)) {
    report.table.add_row({law.law, std::to_string(law.cases), format_double(law.max_rel_error), format_double(tol)});
    report.check(law.law, law.max_rel_error <= tol, "max=" + format_double(law.max_rel_error));
  }
  const auto polys = cfg.natural("axioms.polynomials");
  if (polys > 0) {
    const auto a = run_analytic_suite(opts.seed, polys, max_degree, opts.r_min, opts.r_max);
    report.table.add_row({a.law, std::to_string(a.cases), format_double(a.max_rel_error), format_double(analytic_tol)});
    report.check(a.law, a.max_rel_error <= analytic_tol, "max=" + format_double(a.max_rel_error));
  }
  return report;
}

}  // namespace nscale::tools
