#include "nscale/two_particle.hpp"

#include <cmath>

#include "nscale/error.hpp"
#include "nscale/quantum_scaling.hpp"

namespace nscale {

TwoParticleState::TwoParticleState(Grid grid1, Grid grid2, std::vector<std::complex<double>> amp)
    : grid1_(std::move(grid1)), grid2_(std::move(grid2)), amp_(std::move(amp)) {
  if (amp_.size() != grid1_.size() * grid2_.size()) {
    throw UsageError("two-particle amplitude array has the wrong size");
  }
}

TwoParticleState two_particle_scaled(const MomentumAmplitudes& phi1, const MomentumAmplitudes& phi2,
                                     const GaugeFieldSpec& field, const Point& x0,
                                     const Quadrature& quad) {
  const Grid& g1 = phi1.grid();
  const Grid& g2 = phi2.grid();
  if (g1.dim() != 1 || g2.dim() != 1) throw UsageError("two-particle states need 1D grids");
  if (g1.n(0) > kMaxTwoParticlePoints || g2.n(0) > kMaxTwoParticlePoints) {
    throw UsageError("two-particle grids allow at most 128 points");
  }
  if (g1.n(0) != g2.n(0) || std::abs(g1.length(0) - g2.length(0)) > 1e-12 * g1.length(0)) {
    throw UsageError("two-particle grids must share point count and length");
  }
  if (field.dim() != 1 || x0.dim() != 1) throw UsageError("two-particle field must be 1D");

  Box both = g1.box();
  both.lo[0] = std::min(g1.lo(0), g2.lo(0));
  both.hi[0] = std::max(g1.box().hi[0], g2.box().hi[0]);
  require_integrable(field, both);

  const std::size_t n = g1.size();
  const double dp = phi1.spacing(0);
  const auto r1 = scale_factor_map(g1, field, x0, quad);
  const auto r2 = scale_factor_map(g2, field, x0, quad);

  // weight_m = phi1(p_m) phi2(-p_m) dp; plane-wave tables e^{i p z}.
  std::vector<std::complex<double>> weight(n);
  for (std::size_t m = 0; m < n; ++m) weight[m] = phi1[m] * phi2[phi1.negated(m)] * dp;
  std::vector<std::complex<double>> wave1(n * n), wave2(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    const double p = phi1.wave_vector(m)[0];
    for (std::size_t i = 0; i < n; ++i) {
      wave1[m * n + i] = std::polar(1.0, p * g1.point(i)[0]);
      wave2[m * n + i] = std::polar(1.0, -p * g2.point(i)[0]);
    }
  }

  std::vector<std::complex<double>> amp(n * n);
  for (std::size_t i2 = 0; i2 < n; ++i2) {
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      std::complex<double> s(0.0, 0.0);
      for (std::size_t m = 0; m < n; ++m) s += wave1[m * n + i1] * weight[m] * wave2[m * n + i2];
      amp[i1 + n * i2] = r1[i1] * (r2[i2] * s);
    }
  }
  return TwoParticleState(g1, g2, std::move(amp));
}

}  // namespace nscale
