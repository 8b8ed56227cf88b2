#pragma once

#include "nscale/gauge_field.hpp"
#include "nscale/grid.hpp"

namespace nscale {

/// External potential V(y): either zero or 1/2 m w^2 |y - c|^2.
class PotentialSpec {
 public:
  static PotentialSpec zero();
  static PotentialSpec harmonic(double omega, const Point& center, double mass = 1.0);

  double operator()(const Point& y) const;
  bool is_zero() const { return omega_ == 0.0; }
  double omega() const { return omega_; }

 private:
  double omega_ = 0.0;
  double mass_ = 1.0;
  Point center_;
};

/// hbar, m and V for one particle. momentum_sign selects p = s i hbar D;
/// the default s = -1 is the textbook -i hbar d/dy.
struct HamiltonianParams {
  double hbar = 1.0;
  double mass = 1.0;
  PotentialSpec potential = PotentialSpec::zero();
  int momentum_sign = -1;

  void validate() const;
};

/// Forward covariant difference along `axis`:
///   (r_{y+h e_j, y} psi(y + h e_j) - psi(y)) / h,  r = exp(A_j(y) h),
/// periodic in y. With zero field it is the plain forward difference.
WavePacket scaled_derivative(const WavePacket& psi, const GaugeFieldSpec& field, int axis);

/// Backward partner of scaled_derivative using the same link on each edge:
///   (psi(y) - psi(y - h e_j) / r_{y, y-h e_j}) / h.
WavePacket scaled_backward_derivative(const WavePacket& psi, const GaugeFieldSpec& field, int axis);

/// momentum_sign * i * hbar * scaled_derivative.
WavePacket momentum_apply(const WavePacket& psi, const GaugeFieldSpec& field,
                          const HamiltonianParams& params, int axis);

/// -(hbar^2 / 2m) sum_j D-_j D+_j psi + V psi. At zero field the kinetic
/// part is the standard 3-point Laplacian.
WavePacket hamiltonian_apply(const WavePacket& psi, const GaugeFieldSpec& field,
                             const HamiltonianParams& params);

/// Re <psi|p_j psi> / <psi|psi>.
double momentum_expectation(const WavePacket& psi, const GaugeFieldSpec& field,
                            const HamiltonianParams& params, int axis);
/// Re <psi|H psi> / <psi|psi>.
double energy_expectation(const WavePacket& psi, const GaugeFieldSpec& field,
                          const HamiltonianParams& params);

/// Anti-Hermitian part of an operator O probed on a packet:
/// |<psi|O psi> - conj(<psi|O psi>)| is zero for a Hermitian O. Returns
/// |Im <psi| O psi>| / <psi|psi> for O = p_j.
double momentum_hermiticity_defect(const WavePacket& psi, const GaugeFieldSpec& field,
                                   const HamiltonianParams& params, int axis);

}  // namespace nscale
