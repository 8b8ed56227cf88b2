#include "nscale/law_suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "nscale/scaled_algebra.hpp"

namespace nscale {

namespace {

using cd = std::complex<double>;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(gen_); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  cd complex(double mag_lo, double mag_hi) {
    return std::polar(log_uniform(mag_lo, mag_hi), uniform(0.0, 2.0 * std::numbers::pi));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

double rel(cd got, cd want, double scale) {
  const double s = std::max({std::abs(got), std::abs(want), scale});
  return s == 0.0 ? 0.0 : std::abs(got - want) / s;
}

}  // namespace

std::vector<LawResult> run_field_law_suite(const LawSuiteOptions& opts) {
  std::vector<LawResult> laws = {
      {"add_commutative", 0, 0},       {"add_associative", 0, 0},    {"mul_commutative", 0, 0},
      {"mul_associative", 0, 0},       {"distributive", 0, 0},       {"add_identity", 0, 0},
      {"mul_identity", 0, 0},          {"add_inverse", 0, 0},        {"mul_inverse", 0, 0},
      {"iso_add", 0, 0},               {"iso_sub", 0, 0},            {"iso_mul", 0, 0},
      {"iso_div", 0, 0}};
  auto record = [&](std::size_t law, double err) {
    laws[law].max_rel_error = std::max(laws[law].max_rel_error, err);
    ++laws[law].cases;
  };

  Sampler s(opts.seed);
  for (std::size_t k = 0; k < opts.cases; ++k) {
    const double r = opts.fixed_scales.empty()
                         ? s.log_uniform(opts.r_min, opts.r_max)
                         : opts.fixed_scales[k % opts.fixed_scales.size()];
    const ScaledStructure st = make_structure(r);
    const cd ab = s.complex(opts.magnitude_min, opts.magnitude_max);
    const cd bb = s.complex(opts.magnitude_min, opts.magnitude_max);
    const cd cb = s.complex(opts.magnitude_min, opts.magnitude_max);
    const ScaledValue a = st.same_value(ab), b = st.same_value(bb), c = st.same_value(cb);
    const double ma = std::abs(a.rep()), mb = std::abs(b.rep()), mc = std::abs(c.rep());

    record(0, rel(add(a, b).rep(), add(b, a).rep(), 0.0));
    record(1, rel(add(add(a, b), c).rep(), add(a, add(b, c)).rep(), ma + mb + mc));
    record(2, rel(mul_scaled(a, b).rep(), mul_scaled(b, a).rep(), 0.0));
    record(3, rel(mul_scaled(mul_scaled(a, b), c).rep(), mul_scaled(a, mul_scaled(b, c)).rep(), 0.0));
    const ScaledValue ab_prod = mul_scaled(a, b), ac_prod = mul_scaled(a, c);
    record(4, rel(mul_scaled(a, add(b, c)).rep(), add(ab_prod, ac_prod).rep(),
                  std::abs(ab_prod.rep()) + std::abs(ac_prod.rep())));
    record(5, rel(add(a, st.zero()).rep(), a.rep(), 0.0));
    record(6, rel(mul_scaled(a, st.one()).rep(), a.rep(), 0.0));
    record(7, rel(add(a, negate(a)).rep(), st.zero().rep(), ma));
    record(8, rel(mul_scaled(a, div_scaled(st.one(), a)).rep(), st.one().rep(), 0.0));

    // Correspondence image of the base operation versus the scaled operation
    // on the corresponding values.
    record(9, rel(to_base(add(a, b)), r * (ab + bb), r * (std::abs(ab) + std::abs(bb))));
    record(10, rel(to_base(sub(a, b)), r * (ab - bb), r * (std::abs(ab) + std::abs(bb))));
    record(11, rel(to_base(mul_scaled(a, b)), r * (ab * bb), 0.0));
    record(12, rel(to_base(div_scaled(a, b)), r * (ab / bb), 0.0));
  }
  return laws;
}

LawResult run_analytic_suite(std::uint64_t seed, std::size_t polynomials, int max_degree, double r_min,
                             double r_max) {
  LawResult out{"analytic_scaling", 0.0, 0};
  Sampler s(seed);
  for (std::size_t k = 0; k < polynomials; ++k) {
    const double r = s.log_uniform(r_min, r_max);
    const ScaledStructure st = make_structure(r);
    const int degree = s.integer(0, max_degree);
    std::vector<cd> base_coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : base_coeffs) c = s.complex(1e-3, 1e3);
    const cd arg = s.complex(0.1, 2.0);

    std::vector<ScaledValue> coeffs;
    for (const cd& c : base_coeffs) coeffs.push_back(st.same_value(c));
    const cd got = to_base(eval_analytic_scaled(coeffs, st.same_value(arg)));

    cd f = 0.0;
    double magnitude = 0.0;
    for (int d = degree; d >= 0; --d) f = f * arg + base_coeffs[static_cast<std::size_t>(d)];
    for (int d = 0; d <= degree; ++d) {
      magnitude += std::abs(base_coeffs[static_cast<std::size_t>(d)]) * std::pow(std::abs(arg), d);
    }
    out.max_rel_error = std::max(out.max_rel_error, rel(got, r * f, r * magnitude));
    ++out.cases;
  }
  return out;
}

}  // namespace nscale
