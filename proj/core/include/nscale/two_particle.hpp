#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "nscale/fourier.hpp"
#include "nscale/gauge_field.hpp"
#include "nscale/gauge_paths.hpp"

namespace nscale {

/// Amplitude array amp(z1, z2) for two particles on 1D grids, stored with
/// z1 fastest.
class TwoParticleState {
 public:
  TwoParticleState(Grid grid1, Grid grid2, std::vector<std::complex<double>> amp);

  const Grid& grid1() const { return grid1_; }
  const Grid& grid2() const { return grid2_; }
  std::complex<double> operator()(std::size_t i1, std::size_t i2) const {
    return amp_[i1 + grid1_.size() * i2];
  }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

 private:
  Grid grid1_;
  Grid grid2_;
  std::vector<std::complex<double>> amp_;
};

inline constexpr int kMaxTwoParticlePoints = 128;

/// Momentum-entangled pair with zero total momentum:
///   amp(z1, z2) = r_{z1,x0} r_{z2,x0} sum_p e^{i p z1} phi1(p) e^{-i p z2} phi2(-p) dp.
/// Both grids must be 1D with the same point count (<= 128) and length, so
/// they share one momentum lattice.
TwoParticleState two_particle_scaled(const MomentumAmplitudes& phi1, const MomentumAmplitudes& phi2,
                                     const GaugeFieldSpec& field, const Point& x0,
                                     const Quadrature& quad = {});

}  // namespace nscale
