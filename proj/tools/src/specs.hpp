#pragma once

// Builders that turn config keys into library objects. Shared by the
// experiments; not part of the public tool interface.

#include <map>
#include <string>

#include "nscale/gauge_field.hpp"
#include "nscale/gauge_paths.hpp"
#include "nscale/grid.hpp"
#include "nscale/quantum_scaling.hpp"
#include "nscale_tools/config.hpp"

namespace nscale::tools {

using Defaults = std::map<std::string, std::string>;

void add_grid_defaults(Defaults& d, int dim, double lo, double hi, int n);
/// Keys <prefix>.kind, .coupling, .c, .linear, .diagonal, .cross, .sine_amp,
/// .sine_k, .curl, .plane.
void add_field_defaults(Defaults& d, const std::string& prefix, const std::string& kind);
void add_packet_defaults(Defaults& d, const std::string& mu, double sigma, const std::string& k0);
void add_quadrature_defaults(Defaults& d);

int dim_from(const Config& cfg);
Grid grid_from(const Config& cfg);
Point point_from(const Config& cfg, const std::string& key, int dim);
GaugeFieldSpec field_from(const Config& cfg, const std::string& prefix, int dim);
WavePacket packet_from(const Config& cfg, const Grid& grid);
Quadrature quadrature_from(const Config& cfg);

std::string point_text(const Point& p);

}  // namespace nscale::tools
