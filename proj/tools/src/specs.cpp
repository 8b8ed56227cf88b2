#include "specs.hpp"

#include <sstream>

#include "nscale/csv.hpp"

namespace nscale::tools {

void add_grid_defaults(Defaults& d, int dim, double lo, double hi, int n) {
  d["dim"] = std::to_string(dim);
  d["grid.lo"] = format_double(lo);
  d["grid.hi"] = format_double(hi);
  d["grid.n"] = std::to_string(n);
}

void add_field_defaults(Defaults& d, const std::string& prefix, const std::string& kind) {
  d[prefix + ".kind"] = kind;
  d[prefix + ".coupling"] = "1";
  d[prefix + ".c"] = "";
  d[prefix + ".linear"] = "";
  d[prefix + ".diagonal"] = "";
  d[prefix + ".cross"] = "0";
  d[prefix + ".sine_amp"] = "0";
  d[prefix + ".sine_k"] = "0";
  d[prefix + ".curl"] = "0";
  d[prefix + ".plane"] = "0,1";
}

void add_packet_defaults(Defaults& d, const std::string& mu, double sigma, const std::string& k0) {
  d["packet.mu"] = mu;
  d["packet.sigma"] = format_double(sigma);
  d["packet.k0"] = k0;
}

void add_quadrature_defaults(Defaults& d) {
  d["quad.rule"] = "midpoint";
  d["quad.steps_per_unit"] = "64";
}

int dim_from(const Config& cfg) {
  const int dim = cfg.integer("dim");
  if (dim < 1 || dim > kMaxDim) throw ConfigError("dim must be 1, 2 or 3");
  return dim;
}

Grid grid_from(const Config& cfg) {
  const int dim = dim_from(cfg);
  const double lo = cfg.num("grid.lo");
  const double hi = cfg.num("grid.hi");
  const int n = cfg.integer("grid.n");
  if (!(hi > lo)) throw ConfigError("grid.hi must exceed grid.lo");
  if (n < Grid::kMinPoints || n > Grid::kMaxPoints[static_cast<std::size_t>(dim - 1)]) {
    throw ConfigError("grid.n out of range for dim " + std::to_string(dim));
  }
  return Grid::cube(dim, lo, hi, n);
}

Point point_from(const Config& cfg, const std::string& key, int dim) {
  const auto v = cfg.list(key);
  if (static_cast<int>(v.size()) != dim) {
    throw ConfigError(key + ": expected " + std::to_string(dim) + " comma-separated numbers");
  }
  Point p(dim);
  for (int i = 0; i < dim; ++i) p[i] = v[static_cast<std::size_t>(i)];
  return p;
}

namespace {

Point point_or_zero(const Config& cfg, const std::string& key, int dim) {
  if (cfg.str(key).empty()) return Point(dim);
  return point_from(cfg, key, dim);
}

}  // namespace

GaugeFieldSpec field_from(const Config& cfg, const std::string& prefix, int dim) {
  const double coupling = cfg.num(prefix + ".coupling");
  if (!(coupling >= 0.0)) throw ConfigError(prefix + ".coupling must be non-negative");
  FieldKind kind{};
  try {
    kind = field_kind_from_string(cfg.str(prefix + ".kind"));
  } catch (const std::exception& e) {
    throw ConfigError(prefix + ".kind: " + e.what());
  }
  switch (kind) {
    case FieldKind::zero:
      return GaugeFieldSpec::zero(dim, coupling);
    case FieldKind::constant:
      return GaugeFieldSpec::constant(point_or_zero(cfg, prefix + ".c", dim), coupling);
    case FieldKind::gradient: {
      ScalarPotential g = make_potential(dim);
      g.linear = point_or_zero(cfg, prefix + ".linear", dim);
      g.diagonal = point_or_zero(cfg, prefix + ".diagonal", dim);
      g.cross = cfg.num(prefix + ".cross");
      g.sine_amp = cfg.num(prefix + ".sine_amp");
      g.sine_k = cfg.num(prefix + ".sine_k");
      return GaugeFieldSpec::gradient(g, coupling);
    }
    case FieldKind::rotational: {
      if (dim < 2) throw ConfigError(prefix + ": a rotational field needs dim >= 2");
      const auto plane = cfg.int_list(prefix + ".plane");
      if (plane.size() != 2 || plane[0] == plane[1] || plane[0] < 0 || plane[1] < 0 || plane[0] >= dim ||
          plane[1] >= dim) {
        throw ConfigError(prefix + ".plane: expected two distinct axes below dim");
      }
      return GaugeFieldSpec::rotational(dim, cfg.num(prefix + ".curl"), plane[0], plane[1], coupling);
    }
  }
  throw ConfigError(prefix + ".kind: unsupported");
}

WavePacket packet_from(const Config& cfg, const Grid& grid) {
  const int dim = grid.dim();
  return gaussian_packet(grid, point_from(cfg, "packet.mu", dim), cfg.num("packet.sigma"),
                         point_from(cfg, "packet.k0", dim));
}

Quadrature quadrature_from(const Config& cfg) {
  Quadrature q;
  const std::string& rule = cfg.str("quad.rule");
  if (rule == "midpoint") {
    q.rule = QuadratureRule::midpoint;
  } else if (rule == "gauss-legendre") {
    q.rule = QuadratureRule::gauss_legendre;
  } else {
    throw ConfigError("quad.rule must be midpoint or gauss-legendre");
  }
  q.steps_per_unit = cfg.integer("quad.steps_per_unit");
  if (q.steps_per_unit < 1) throw ConfigError("quad.steps_per_unit must be positive");
  return q;
}

std::string point_text(const Point& p) {
  std::string s;
  for (int i = 0; i < p.dim(); ++i) {
    if (i) s += ';';
    s += format_double(p[i]);
  }
  return s;
}

}  // namespace nscale::tools
