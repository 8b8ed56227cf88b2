#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nscale {

/// Largest relative error observed for one algebraic law over a random sweep.
struct LawResult {
  std::string law;
  double max_rel_error = 0.0;
  std::size_t cases = 0;
};

struct LawSuiteOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 10000;
  double r_min = 0.1;
  double r_max = 10.0;
  double magnitude_min = 1e-3;
  double magnitude_max = 1e3;
  /// When non-empty, cycle through these scales instead of sampling r.
  std::vector<double> fixed_scales;
};

/// Field axioms of (add, mul_scaled, div_scaled) and the isomorphism law
/// to_base(a op_r b) = r (a_base op b_base) on random complex values.
/// Relative errors are measured against the magnitude of the terms that
/// enter each law, so cancellation in a sum does not inflate them.
std::vector<LawResult> run_field_law_suite(const LawSuiteOptions& opts);

/// Random polynomials of degree <= max_degree evaluated in a scaled
/// structure versus r * f(a) evaluated in the base structure.
LawResult run_analytic_suite(std::uint64_t seed, std::size_t polynomials, int max_degree = 8,
                             double r_min = 0.1, double r_max = 10.0);

}  // namespace nscale
