#include "nscale_tools/experiments.hpp"
#include "specs.hpp"

namespace nscale::tools {

namespace {

Defaults axioms_defaults() {
  return {{"seed", "1"},
          {"axioms.cases", "10000"},
          {"axioms.r_min", "0.1"},
          {"axioms.r_max", "10"},
          {"axioms.magnitude_min", "0.001"},
          {"axioms.magnitude_max", "1000"},
          {"axioms.scales", ""},
          {"axioms.polynomials", "1000"},
          {"axioms.max_degree", "8"},
          {"axioms.tol", "1e-12"},
          {"axioms.analytic_tol", "1e-10"}};
}

Defaults paths_defaults() {
  Defaults d{{"seed", "1"},
             {"paths.pairs", "32"},
             {"paths.steps", "64"},
             {"paths.loop_side", "0.25"},
             {"paths.loops", "4"},
             {"paths.tol", "1e-6"},
             {"paths.min_order", "1.8"}};
  add_grid_defaults(d, 2, -1.0, 1.0, 8);
  add_field_defaults(d, "field", "gradient");
  d["field.linear"] = "0.3,-0.2";
  d["field.diagonal"] = "0.1,0.2";
  d["field.sine_amp"] = "0.2";
  d["field.sine_k"] = "1.5";
  return d;
}

Defaults packet_defaults() {
  Defaults d{{"seed", "1"},
             {"packet.anchor", "-10"},
             {"packet.volume.lo", "-8"},
             {"packet.volume.hi", "8"},
             {"packet.dump", "true"},
             {"packet.anchor_tol", "1e-10"}};
  add_grid_defaults(d, 1, -10.0, 10.0, 256);
  add_field_defaults(d, "field", "constant");
  d["field.c"] = "0.05";
  add_packet_defaults(d, "0.5", 1.0, "0.5");
  add_quadrature_defaults(d);
  return d;
}

Defaults detector_defaults() {
  Defaults d{{"seed", "1"},
             {"detector.deltas", "2,1,0.5,0.25"},
             {"detector.anchor", "corner"},
             {"detector.mode", "raw"},
             {"detector.min_order", "0.9"},
             {"detector.whole_tol", "1e-12"}};
  add_grid_defaults(d, 3, -8.0, 8.0, 64);
  add_field_defaults(d, "field", "constant");
  d["field.c"] = "0.05,0,0";
  add_packet_defaults(d, "1.5,-1,0.5", 1.0, "0,0,0");
  add_quadrature_defaults(d);
  return d;
}

Defaults gauge_defaults() {
  Defaults d{{"seed", "1"},
             {"gauge.n_list", "32,64,128,256"},
             {"gauge.components", "1"},
             {"gauge.g1", "0.7"},
             {"gauge.g2", "0"},
             {"gauge.omega1", ""},
             {"gauge.omega2", ""},
             {"gauge.omega3", ""},
             {"gauge.phi", "sine"},
             {"gauge.phi.amp", "0.5"},
             {"gauge.phi.periods", "1"},
             {"gauge.phi.offset", "0"},
             {"gauge.exact_tol", "1e-12"},
             {"gauge.min_order", "0.9"}};
  d["dim"] = "1";
  d["grid.lo"] = "0";
  d["grid.hi"] = "8";
  add_field_defaults(d, "field", "constant");
  d["field.c"] = "0.2";
  add_field_defaults(d, "xi", "gradient");
  d["xi.linear"] = "0.3";
  d["xi.sine_amp"] = "0.4";
  d["xi.sine_k"] = "0.9";
  add_packet_defaults(d, "4", 1.0, "1");
  return d;
}

Defaults commerce_defaults() {
  Defaults d{{"seed", "1"},
             {"commerce.couplings", "0,0.1,1"},
             {"commerce.theory", "1.5"},
             {"commerce.experiment", "1.5"},
             {"commerce.theory_point", "-1,0"},
             {"commerce.experiment_point", "1,0.5"},
             {"commerce.meeting_point", "0,1"},
             {"commerce.detour", "0.5,-1"},
             {"commerce.steps", "64"},
             {"dim", "2"}};
  add_field_defaults(d, "field", "rotational");
  d["field.curl"] = "0.3";
  return d;
}

}  // namespace

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> all = {
      {"axioms", "field axioms, isomorphism and analytic scaling laws", axioms_defaults(), run_axioms},
      {"paths", "path scale factors, loops and integrability", paths_defaults(), run_paths},
      {"packet", "scaled packet, expectations and anchor relation", packet_defaults(), run_packet},
      {"detector-sweep", "detector expectation versus cube size", detector_defaults(), run_detector_sweep},
      {"gauge-check", "covariant derivative under U(1) transformations", gauge_defaults(), run_gauge_check},
      {"commerce-demo", "comparison of transported outcomes", commerce_defaults(), run_commerce_demo},
  };
  return all;
}

}  // namespace nscale::tools
