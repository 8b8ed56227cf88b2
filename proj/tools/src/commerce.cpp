#include "nscale/gauge_paths.hpp"
#include "nscale/scaled_algebra.hpp"
#include "nscale_tools/experiments.hpp"
#include "specs.hpp"

namespace nscale::tools {

// A theory outcome recorded at one point and an experiment outcome recorded
// at another are carried to a meeting point and compared there. Each value
// lives in the structure of its own point, whose scale relative to the
// meeting point depends on the field, the coupling and the path, but the
// carried representation does not.
RunReport run_commerce_demo(const Config& cfg) {
  const int dim = dim_from(cfg);
  const GaugeFieldSpec base_field = field_from(cfg, "field", dim);
  const Point theory_at = point_from(cfg, "commerce.theory_point", dim);
  const Point experiment_at = point_from(cfg, "commerce.experiment_point", dim);
  const Point meet = point_from(cfg, "commerce.meeting_point", dim);
  const Point detour = point_from(cfg, "commerce.detour", dim);
  const BaseValue theory(cfg.num("commerce.theory"), 0.0);
  const BaseValue experiment(cfg.num("commerce.experiment"), 0.0);
  const int steps = cfg.integer("commerce.steps");
  if (steps < 1) throw ConfigError("commerce.steps must be positive");
  const auto couplings = cfg.list("commerce.couplings");
  if (couplings.empty()) throw ConfigError("commerce.couplings must not be empty");

  RunReport report;
  report.table = CsvTable({"coupling", "path", "r_theory", "r_experiment", "theory_at_meeting",
                           "experiment_at_meeting", "verdict"});

  const ScaledStructure meeting = ScaledStructure::base();
  bool first = true, first_verdict = false, verdicts_agree = true, carried_exactly = true;
  for (double g : couplings) {
    if (!(g >= 0.0)) throw ConfigError("commerce.couplings must be non-negative");
    const GaugeFieldSpec field = base_field.with_coupling(g);
    for (const std::string path : {"straight", "detour"}) {
      auto route = [&](const Point& from) {
        return path == "straight" ? PolylinePath::make({from, meet}) : PolylinePath::make({from, detour, meet});
      };
      // r of each recording point's structure relative to the meeting point.
      const double r_t = path_scale(field, route(theory_at), steps).value;
      const double r_e = path_scale(field, route(experiment_at), steps).value;
      const ScaledValue recorded_t(make_structure(r_t), theory);
      const ScaledValue recorded_e(make_structure(r_e), experiment);

      const ScaledValue carried_t(meeting, parallel_transport_value(recorded_t.rep()));
      const ScaledValue carried_e(meeting, parallel_transport_value(recorded_e.rep()));
      const bool equal = carried_t == carried_e;

      carried_exactly = carried_exactly && carried_t.rep() == theory && carried_e.rep() == experiment;
      if (first) first_verdict = equal;
      verdicts_agree = verdicts_agree && equal == first_verdict;
      first = false;
      report.table.add_row({format_double(g), path, format_double(r_t), format_double(r_e),
                            format_double(carried_t.rep().real()), format_double(carried_e.rep().real()),
                            equal ? "equal" : "unequal"});
    }
  }
  report.check("verdict_independent_of_scaling", verdicts_agree, first_verdict ? "equal" : "unequal");
  report.check("transport_exact", carried_exactly);
  return report;
}

}  // namespace nscale::tools
