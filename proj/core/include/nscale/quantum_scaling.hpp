#pragma once

#include <complex>
#include <vector>

#include "nscale/gauge_field.hpp"
#include "nscale/gauge_paths.hpp"
#include "nscale/grid.hpp"

namespace nscale {

/// Unit-norm packet amp(y) ~ exp(-|y - mu|^2 / 4 sigma^2) exp(i k0 . y).
/// |amp|^2 has standard deviation sigma along every axis.
WavePacket gaussian_packet(const Grid& grid, const Point& mu, double sigma, const Point& k0);

/// <a|b> = sum conj(a) b h^d.
std::complex<double> inner_product(const WavePacket& a, const WavePacket& b);
/// sum |amp|^2 h^d.
double standard_norm(const WavePacket& psi);
/// Unscaled <y> = sum y |amp|^2 h^d / sum |amp|^2 h^d.
Point standard_expectation(const WavePacket& psi);

/// Packet whose values are transported to the base point as the same
/// values. Identity on amplitudes.
WavePacket parallel_packet(const WavePacket& psi);

/// r_{y,anchor} at every grid point y along straight lines; 1 at y = anchor.
std::vector<double> scale_factor_map(const Grid& grid, const GaugeFieldSpec& field,
                                     const Point& anchor, const Quadrature& quad = {});

/// amp'(y) = r_{y,x0} amp(y). Throws IntegrabilityError for fields whose
/// scale factors depend on the path.
WavePacket scaled_packet(const WavePacket& psi, const GaugeFieldSpec& field, const Point& x0,
                         const Quadrature& quad = {});

/// amp'(y) = r_{y,z} amp(y) inside the closed box V and 0 outside. z must lie
/// on the surface of V and x0 outside V; the transport from z to x0 is the
/// identity on values.
WavePacket volume_scaled_packet(const WavePacket& psi, const GaugeFieldSpec& field, const Box& volume,
                                const Point& z, const Point& x0, const Quadrature& quad = {});

/// max_y |psi_w(y) - r_{z,w} psi_z(y)| where psi_a is the packet restricted
/// to V and scaled relative to anchor a.
double anchor_relation_check(const WavePacket& psi, const GaugeFieldSpec& field, const Box& volume,
                             const Point& z, const Point& w, const Quadrature& quad = {});

enum class ExpectationMode {
  raw,        // sum r y |amp|^2 h^d
  normalized  // raw / sum r |amp|^2 h^d
};

struct ScaledExpectation {
  Point value;
  double scaled_norm = 0.0;  // sum r |amp|^2 h^d
};

ScaledExpectation position_expectation_scaled(const WavePacket& psi, const GaugeFieldSpec& field,
                                              const Point& x0, ExpectationMode mode,
                                              const Quadrature& quad = {});

}  // namespace nscale
