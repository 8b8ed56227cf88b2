#include "nscale/hamiltonian.hpp"

#include <cmath>

#include "nscale/error.hpp"
#include "nscale/gauge_paths.hpp"
#include "nscale/quantum_scaling.hpp"

namespace nscale {

PotentialSpec PotentialSpec::zero() { return PotentialSpec(); }

PotentialSpec PotentialSpec::harmonic(double omega, const Point& center, double mass) {
  if (!(omega > 0.0) || !(mass > 0.0)) throw DomainError("harmonic potential needs omega, mass > 0");
  PotentialSpec v;
  v.omega_ = omega;
  v.mass_ = mass;
  v.center_ = center;
  return v;
}

double PotentialSpec::operator()(const Point& y) const {
  if (is_zero()) return 0.0;
  const Point d = y - center_;
  return 0.5 * mass_ * omega_ * omega_ * dot(d, d);
}

void HamiltonianParams::validate() const {
  if (!(hbar > 0.0) || !(mass > 0.0)) throw DomainError("hbar and mass must be positive");
  if (momentum_sign != 1 && momentum_sign != -1) throw UsageError("momentum_sign must be +1 or -1");
}

namespace {

void check_axis(const WavePacket& psi, const GaugeFieldSpec& field, int axis) {
  if (axis < 0 || axis >= psi.grid().dim()) throw UsageError("derivative axis out of range");
  if (field.dim() != psi.grid().dim()) throw UsageError("field and grid dimensions differ");
}

// r_{y + h e_j, y} on the edge leaving each grid point along +axis.
std::vector<double> forward_links(const Grid& g, const GaugeFieldSpec& field, int axis) {
  const Point e = Point::unit(g.dim(), axis);
  std::vector<double> r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = link_scale(field, g.point(i), e, g.h(axis)).value;
  return r;
}

}  // namespace

WavePacket scaled_derivative(const WavePacket& psi, const GaugeFieldSpec& field, int axis) {
  check_axis(psi, field, axis);
  const Grid& g = psi.grid();
  const double h = g.h(axis);
  const auto r = forward_links(g, field, axis);
  Amplitudes out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out[i] = (r[i] * psi[g.neighbor(i, axis, 1)] - psi[i]) / h;
  }
  return WavePacket(g, std::move(out));
}

WavePacket scaled_backward_derivative(const WavePacket& psi, const GaugeFieldSpec& field, int axis) {
  check_axis(psi, field, axis);
  const Grid& g = psi.grid();
  const double h = g.h(axis);
  const auto r = forward_links(g, field, axis);
  Amplitudes out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const std::size_t prev = g.neighbor(i, axis, -1);
    out[i] = (psi[i] - (1.0 / r[prev]) * psi[prev]) / h;
  }
  return WavePacket(g, std::move(out));
}

WavePacket momentum_apply(const WavePacket& psi, const GaugeFieldSpec& field,
                          const HamiltonianParams& params, int axis) {
  params.validate();
  const WavePacket d = scaled_derivative(psi, field, axis);
  const std::complex<double> factor(0.0, params.momentum_sign * params.hbar);
  Amplitudes out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = factor * d[i];
  return WavePacket(psi.grid(), std::move(out));
}

WavePacket hamiltonian_apply(const WavePacket& psi, const GaugeFieldSpec& field,
                             const HamiltonianParams& params) {
  params.validate();
  const Grid& g = psi.grid();
  Amplitudes kinetic(psi.size(), {0.0, 0.0});
  for (int axis = 0; axis < g.dim(); ++axis) {
    const WavePacket second =
        scaled_backward_derivative(scaled_derivative(psi, field, axis), field, axis);
    for (std::size_t i = 0; i < psi.size(); ++i) kinetic[i] += second[i];
  }
  const double c = -(params.hbar * params.hbar) / (2.0 * params.mass);
  Amplitudes out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out[i] = c * kinetic[i] + params.potential(g.point(i)) * psi[i];
  }
  return WavePacket(g, std::move(out));
}

double momentum_expectation(const WavePacket& psi, const GaugeFieldSpec& field,
                            const HamiltonianParams& params, int axis) {
  const double norm = standard_norm(psi);
  if (!(norm > 0.0)) throw UsageError("momentum expectation of a zero-norm packet");
  return inner_product(psi, momentum_apply(psi, field, params, axis)).real() / norm;
}

double energy_expectation(const WavePacket& psi, const GaugeFieldSpec& field,
                          const HamiltonianParams& params) {
  const double norm = standard_norm(psi);
  if (!(norm > 0.0)) throw UsageError("energy expectation of a zero-norm packet");
  return inner_product(psi, hamiltonian_apply(psi, field, params)).real() / norm;
}

double momentum_hermiticity_defect(const WavePacket& psi, const GaugeFieldSpec& field,
                                   const HamiltonianParams& params, int axis) {
  const double norm = standard_norm(psi);
  if (!(norm > 0.0)) throw UsageError("hermiticity probe of a zero-norm packet");
  return std::abs(inner_product(psi, momentum_apply(psi, field, params, axis)).imag()) / norm;
}

}  // namespace nscale
