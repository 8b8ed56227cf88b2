#include "nscale/gauge_paths.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nscale/error.hpp"

namespace nscale {

namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975362316835609, -0.7966664774136267395915539, -0.5255324099163289858177390,
    -0.1834346424956498049394761, 0.1834346424956498049394761,  0.5255324099163289858177390,
    0.7966664774136267395915539,  0.9602898564975362316835609};
constexpr std::array<double, 8> kGaussWeights = {
    0.1012285362903762591525314, 0.2223810344533744705443560, 0.3137066458778872873379622,
    0.3626837833783619829651504, 0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

// Integral of f over t in [0, 1].
template <class Integrand>
double integrate_unit(Integrand&& f, int steps, QuadratureRule rule) {
  if (steps < 1) throw UsageError("quadrature needs at least one step");
  const double dt = 1.0 / steps;
  double sum = 0.0;
  if (rule == QuadratureRule::midpoint) {
    for (int k = 0; k < steps; ++k) sum += f((k + 0.5) * dt);
    return sum * dt;
  }
  for (int k = 0; k < steps; ++k) {
    const double mid = (k + 0.5) * dt;
    double local = 0.0;
    for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
      local += kGaussWeights[q] * f(mid + 0.5 * dt * kGaussNodes[q]);
    }
    sum += 0.5 * local;
  }
  return sum * dt;
}

}  // namespace

int Quadrature::steps_for(double length) const {
  if (!(steps_per_unit > 0.0)) throw UsageError("quadrature steps_per_unit must be positive");
  return std::max(1, static_cast<int>(std::ceil(length * steps_per_unit)));
}

PolylinePath PolylinePath::make(std::vector<Point> vertices) {
  if (vertices.size() < 2) throw UsageError("path needs at least two vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require_same_dim(vertices.front(), vertices[i], "path vertex");
    if (!vertices[i].is_finite()) throw UsageError("path vertex is not finite");
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw UsageError("path has repeated consecutive vertex at index " + std::to_string(i));
    }
  }
  return PolylinePath(std::move(vertices));
}

PolylinePath PolylinePath::square_loop(const Point& corner, double side, int axis_a, int axis_b) {
  if (!(side > 0.0)) throw UsageError("square loop side must be positive");
  const Point ea = side * Point::unit(corner.dim(), axis_a);
  const Point eb = side * Point::unit(corner.dim(), axis_b);
  return make({corner, corner + ea, corner + ea + eb, corner + eb, corner});
}

double PolylinePath::length() const {
  double len = 0.0;
  for (std::size_t i = 1; i < vertices_.size(); ++i) len += distance(vertices_[i - 1], vertices_[i]);
  return len;
}

PolylinePath PolylinePath::reversed() const {
  std::vector<Point> v(vertices_.rbegin(), vertices_.rend());
  return PolylinePath(std::move(v));
}

PolylinePath PolylinePath::then(const PolylinePath& next) const {
  if (!(back() == next.front())) throw UsageError("cannot concatenate paths that do not meet");
  std::vector<Point> v = vertices_;
  v.insert(v.end(), next.vertices_.begin() + 1, next.vertices_.end());
  return make(std::move(v));
}

LinkFactor link_scale(const GaugeFieldSpec& spec, const Point& x, const Point& direction, double dx) {
  if (!(dx > 0.0)) throw UsageError("link step dx must be positive");
  if (std::abs(direction.norm() - 1.0) > 1e-12) throw UsageError("link direction must be a unit vector");
  const double exponent = dot(spec.eval(x), direction) * dx;
  return LinkFactor{std::exp(exponent), x, x + dx * direction};
}

double first_order_link(const GaugeFieldSpec& spec, const Point& x, const Point& direction, double dx) {
  if (!(dx > 0.0)) throw UsageError("link step dx must be positive");
  if (std::abs(direction.norm() - 1.0) > 1e-12) throw UsageError("link direction must be a unit vector");
  return 1.0 + dot(spec.eval(x), direction) * dx;
}

double segment_integral(const GaugeFieldSpec& spec, const Point& a, const Point& b, int steps,
                        QuadratureRule rule) {
  require_same_dim(a, b, "segment");
  if (spec.dim() != a.dim()) throw UsageError("segment and field dimensions differ");
  const Point d = b - a;
  return integrate_unit([&](double t) { return spec.directional(a, d, t); }, steps, rule);
}

double path_integral(const GaugeFieldSpec& spec, const PolylinePath& path, int steps_per_segment,
                     QuadratureRule rule) {
  if (path.dim() != spec.dim()) throw UsageError("path and field dimensions differ");
  const auto& v = path.vertices();
  double total = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    total += segment_integral(spec, v[i - 1], v[i], steps_per_segment, rule);
  }
  return total;
}

LinkFactor path_scale(const GaugeFieldSpec& spec, const PolylinePath& path, int steps_per_segment,
                      QuadratureRule rule) {
  return LinkFactor{std::exp(path_integral(spec, path, steps_per_segment, rule)), path.front(),
                    path.back()};
}

LinkFactor straight_line_scale(const GaugeFieldSpec& spec, const Point& x, const Point& y, int steps,
                               QuadratureRule rule) {
  if (x == y) throw UsageError("straight_line_scale needs distinct endpoints");
  return path_scale(spec, PolylinePath::make({x, y}), steps, rule);
}

LinkFactor straight_line_scale(const GaugeFieldSpec& spec, const Point& x, const Point& y,
                               const Quadrature& quad) {
  return straight_line_scale(spec, x, y, quad.steps_for(distance(x, y)), quad.rule);
}

std::array<double, kMaxDim> straight_line_axis_factors(const GaugeFieldSpec& spec, const Point& x,
                                                       const Point& y, int steps,
                                                       QuadratureRule rule) {
  if (x == y) throw UsageError("straight_line_axis_factors needs distinct endpoints");
  require_same_dim(x, y, "straight line");
  const Point d = y - x;
  std::array<double, kMaxDim> factors{1.0, 1.0, 1.0};
  for (int i = 0; i < x.dim(); ++i) {
    const double integral =
        integrate_unit([&](double t) { return spec.component(x + t * d, i) * d[i]; }, steps, rule);
    factors[static_cast<std::size_t>(i)] = std::exp(integral);
  }
  return factors;
}

double loop_residual(const GaugeFieldSpec& spec, const PolylinePath& loop, int steps_per_segment,
                     QuadratureRule rule) {
  if (!loop.is_closed()) throw UsageError("loop_residual needs a closed path");
  return std::abs(path_scale(spec, loop, steps_per_segment, rule).value - 1.0);
}

IntegrabilityReport integrability_check(const GaugeFieldSpec& spec, const Box& region,
                                        double plaquette_size, double tol, int steps_per_segment,
                                        QuadratureRule rule) {
  const int d = region.dim();
  if (d != spec.dim()) throw UsageError("region and field dimensions differ");
  if (!(plaquette_size > 0.0)) throw UsageError("plaquette size must be positive");
  for (int i = 0; i < d; ++i) {
    if (plaquette_size > region.extent(i) * (1.0 + 1e-12)) {
      throw UsageError("plaquette does not fit in the region");
    }
  }

  // Lattice of plaquette origins along each axis: lo, lo + s, ... while the
  // plaquette still fits (for in-plane axes) or the point is in the box.
  auto positions = [&](int axis, bool in_plane) {
    std::vector<double> out;
    const double lo = region.lo[axis];
    const double limit = region.hi[axis] - (in_plane ? plaquette_size : 0.0);
    for (int k = 0;; ++k) {
      const double p = lo + k * plaquette_size;
      if (p > limit + 1e-12 * std::max(1.0, std::abs(limit))) break;
      out.push_back(p);
    }
    return out;
  };

  IntegrabilityReport report;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const int c = 3 - a - b;  // only meaningful when d == 3
      const auto pa = positions(a, true);
      const auto pb = positions(b, true);
      const std::vector<double> pc = d == 3 ? positions(c, false) : std::vector<double>{0.0};
      for (double u : pa) {
        for (double v : pb) {
          for (double w : pc) {
            Point corner(d);
            corner[a] = u;
            corner[b] = v;
            if (d == 3) corner[c] = w;
            const double res = loop_residual(
                spec, PolylinePath::square_loop(corner, plaquette_size, a, b), steps_per_segment, rule);
            report.max_residual = std::max(report.max_residual, res);
            ++report.loops_checked;
          }
        }
      }
    }
  }
  report.integrable = report.max_residual <= tol;
  return report;
}

void require_integrable(const GaugeFieldSpec& spec, const Box& region) {
  if (spec.kind() == FieldKind::zero || spec.coupling() == 0.0 || region.dim() < 2) return;
  double smallest = region.extent(0);
  for (int i = 1; i < region.dim(); ++i) smallest = std::min(smallest, region.extent(i));
  const auto report =
      integrability_check(spec, region, smallest / 8.0, 1e-8, 4, QuadratureRule::gauss_legendre);
  if (!report.integrable) {
    std::ostringstream os;
    os << "gauge field of kind '" << to_string(spec.kind())
       << "' is not integrable on the region: largest plaquette residual " << report.max_residual
       << " exceeds 1e-08; scale factors would depend on the path";
    throw IntegrabilityError(os.str());
  }
}

}  // namespace nscale
