#include "nscale/quantum_scaling.hpp"

#include <cmath>
#include <string>

#include "nscale/error.hpp"
#include "nscale/numeric.hpp"

namespace nscale {

WavePacket gaussian_packet(const Grid& grid, const Point& mu, double sigma, const Point& k0) {
  require_same_dim(mu, k0, "gaussian_packet");
  if (mu.dim() != grid.dim()) throw UsageError("gaussian_packet: centre and grid dimensions differ");
  if (!grid.box().contains(mu)) throw UsageError("gaussian_packet: centre lies outside the grid");
  for (int a = 0; a < grid.dim(); ++a) {
    if (!(sigma > 2.0 * grid.h(a))) {
      throw UsageError("gaussian_packet: sigma must exceed twice the grid spacing");
    }
  }
  Amplitudes amp(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point y = grid.point(i);
    const Point d = y - mu;
    const double envelope = std::exp(-dot(d, d) / (4.0 * sigma * sigma));
    amp[i] = std::polar(envelope, dot(k0, y));
  }
  std::vector<double> w(amp.size());
  for (std::size_t i = 0; i < amp.size(); ++i) w[i] = std::norm(amp[i]);
  const double scale = 1.0 / std::sqrt(pairwise_sum(w) * grid.cell_volume());
  for (auto& a : amp) a *= scale;
  return WavePacket(grid, std::move(amp));
}

std::complex<double> inner_product(const WavePacket& a, const WavePacket& b) {
  if (!(a.grid() == b.grid())) throw UsageError("inner_product: packets live on different grids");
  Amplitudes terms(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) terms[i] = std::conj(a[i]) * b[i];
  return pairwise_sum(terms) * a.grid().cell_volume();
}

double standard_norm(const WavePacket& psi) {
  std::vector<double> w(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) w[i] = std::norm(psi[i]) * psi.grid().cell_volume();
  return pairwise_sum(w);
}

Point standard_expectation(const WavePacket& psi) {
  const Grid& g = psi.grid();
  const double norm = standard_norm(psi);
  if (!(norm > 0.0)) throw UsageError("standard_expectation: packet has zero norm");
  Point out(g.dim());
  std::vector<double> terms(psi.size());
  for (int a = 0; a < g.dim(); ++a) {
    for (std::size_t i = 0; i < psi.size(); ++i) {
      terms[i] = g.point(i)[a] * (std::norm(psi[i]) * g.cell_volume());
    }
    out[a] = pairwise_sum(terms) / norm;
  }
  return out;
}

WavePacket parallel_packet(const WavePacket& psi) { return psi; }

std::vector<double> scale_factor_map(const Grid& grid, const GaugeFieldSpec& field,
                                     const Point& anchor, const Quadrature& quad) {
  if (field.dim() != grid.dim() || anchor.dim() != grid.dim()) {
    throw UsageError("scale_factor_map: field, anchor and grid dimensions differ");
  }
  std::vector<double> r(grid.size(), 1.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point y = grid.point(i);
    if (y == anchor) continue;
    r[i] = straight_line_scale(field, anchor, y, quad).value;
  }
  return r;
}

WavePacket scaled_packet(const WavePacket& psi, const GaugeFieldSpec& field, const Point& x0,
                         const Quadrature& quad) {
  require_integrable(field, psi.grid().box());
  const auto r = scale_factor_map(psi.grid(), field, x0, quad);
  Amplitudes amp(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) amp[i] = r[i] * psi[i];
  return WavePacket(psi.grid(), std::move(amp));
}

namespace {

void check_volume(const WavePacket& psi, const Box& volume, const Point& z) {
  if (volume.dim() != psi.grid().dim()) throw UsageError("volume and grid dimensions differ");
  const double tol = 1e-12 * std::max(1.0, distance(volume.lo, volume.hi));
  if (!volume.on_surface(z, tol)) {
    throw UsageError("anchor point " + z.to_string() + " is not on the surface of the volume");
  }
}

Amplitudes restrict_and_scale(const WavePacket& psi, const GaugeFieldSpec& field, const Box& volume,
                              const Point& z, const Quadrature& quad) {
  const Grid& g = psi.grid();
  Amplitudes amp(psi.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const Point y = g.point(i);
    if (!volume.contains(y)) continue;
    const double r = y == z ? 1.0 : straight_line_scale(field, z, y, quad).value;
    amp[i] = r * psi[i];
  }
  return amp;
}

}  // namespace

WavePacket volume_scaled_packet(const WavePacket& psi, const GaugeFieldSpec& field, const Box& volume,
                                const Point& z, const Point& x0, const Quadrature& quad) {
  check_volume(psi, volume, z);
  if (volume.contains(x0)) {
    throw UsageError("base point " + x0.to_string() + " must lie outside the volume");
  }
  require_integrable(field, psi.grid().box());
  return WavePacket(psi.grid(), restrict_and_scale(psi, field, volume, z, quad));
}

double anchor_relation_check(const WavePacket& psi, const GaugeFieldSpec& field, const Box& volume,
                             const Point& z, const Point& w, const Quadrature& quad) {
  check_volume(psi, volume, z);
  check_volume(psi, volume, w);
  require_integrable(field, psi.grid().box());
  if (z == w) return 0.0;
  const Amplitudes psi_z = restrict_and_scale(psi, field, volume, z, quad);
  const Amplitudes psi_w = restrict_and_scale(psi, field, volume, w, quad);
  const double r_zw = straight_line_scale(field, w, z, quad).value;
  double worst = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    worst = std::max(worst, std::abs(psi_w[i] - r_zw * psi_z[i]));
  }
  return worst;
}

ScaledExpectation position_expectation_scaled(const WavePacket& psi, const GaugeFieldSpec& field,
                                              const Point& x0, ExpectationMode mode,
                                              const Quadrature& quad) {
  require_integrable(field, psi.grid().box());
  const Grid& g = psi.grid();
  const auto r = scale_factor_map(g, field, x0, quad);
  std::vector<double> terms(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) terms[i] = r[i] * (std::norm(psi[i]) * g.cell_volume());
  ScaledExpectation out{Point(g.dim()), pairwise_sum(terms)};
  if (!(out.scaled_norm > 0.0)) throw UsageError("position expectation of a zero-norm packet");
  for (int a = 0; a < g.dim(); ++a) {
    for (std::size_t i = 0; i < psi.size(); ++i) {
      terms[i] = r[i] * (g.point(i)[a] * (std::norm(psi[i]) * g.cell_volume()));
    }
    const double raw = pairwise_sum(terms);
    out.value[a] = mode == ExpectationMode::raw ? raw : raw / out.scaled_norm;
  }
  return out;
}

}  // namespace nscale
