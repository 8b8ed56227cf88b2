#pragma once

#include "nscale/grid.hpp"

namespace nscale {

/// Amplitudes over the discrete wave-vector lattice of a grid. Entry m on
/// axis a has wave number 2 pi m' / L_a with m' = m for m < n/2 and m - n
/// otherwise.
class MomentumAmplitudes {
 public:
  MomentumAmplitudes(Grid grid, Amplitudes amp);

  const Grid& grid() const { return grid_; }
  const Amplitudes& amplitudes() const { return amp_; }
  std::complex<double> operator[](std::size_t i) const { return amp_[i]; }
  std::size_t size() const { return amp_.size(); }

  Point wave_vector(std::size_t flat) const;
  /// Flat index of the wave vector -k(flat).
  std::size_t negated(std::size_t flat) const;
  /// 2 pi / L_a.
  double spacing(int axis) const;

 private:
  Grid grid_;
  Amplitudes amp_;
};

/// Unitary discrete Fourier transform of the packet samples,
///   phi_m = N^{-1/2} sum_n psi_n exp(-2 pi i m.n / N).
/// All values are transported to one point first, which is the identity on
/// representations, so this is the ordinary transform.
MomentumAmplitudes momentum_amplitudes(const WavePacket& psi);

/// Inverse of momentum_amplitudes.
WavePacket position_amplitudes(const MomentumAmplitudes& phi);

}  // namespace nscale
