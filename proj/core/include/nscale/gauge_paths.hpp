#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nscale/gauge_field.hpp"
#include "nscale/geometry.hpp"

namespace nscale {

/// Positive real scale factor r_{to,from} relating number values at `to`
/// to their representation at `from`.
struct LinkFactor {
  double value = 1.0;
  Point from;
  Point to;
};

enum class QuadratureRule {
  midpoint,       // composite midpoint, second order
  gauss_legendre  // composite 8-point Gauss-Legendre
};

/// How straight segments are integrated when no explicit step count is
/// given: ceil(length * steps_per_unit) sub-intervals, at least one.
struct Quadrature {
  QuadratureRule rule = QuadratureRule::midpoint;
  double steps_per_unit = 64.0;

  int steps_for(double length) const;
};

/// Ordered vertex list in R^d with at least two vertices and no repeated
/// consecutive vertex.
class PolylinePath {
 public:
  static PolylinePath make(std::vector<Point> vertices);
  /// Axis-aligned square loop starting and ending at `corner`, traversed
  /// corner -> +axis_a -> +axis_b -> back.
  static PolylinePath square_loop(const Point& corner, double side, int axis_a, int axis_b);

  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  int dim() const { return vertices_.front().dim(); }
  bool is_closed() const { return vertices_.front() == vertices_.back(); }
  double length() const;

  PolylinePath reversed() const;
  /// This path followed by `next`; next must start where this one ends.
  PolylinePath then(const PolylinePath& next) const;

 private:
  explicit PolylinePath(std::vector<Point> v) : vertices_(std::move(v)) {}
  std::vector<Point> vertices_;
};

/// exp(A(x) . direction * dx) for a single lattice step.
LinkFactor link_scale(const GaugeFieldSpec& spec, const Point& x, const Point& direction, double dx);
/// 1 + A(x) . direction * dx.
double first_order_link(const GaugeFieldSpec& spec, const Point& x, const Point& direction, double dx);

/// Line integral of A along the straight segment a -> b.
double segment_integral(const GaugeFieldSpec& spec, const Point& a, const Point& b, int steps,
                        QuadratureRule rule = QuadratureRule::midpoint);

/// Line integral of A along the whole polyline.
double path_integral(const GaugeFieldSpec& spec, const PolylinePath& path, int steps_per_segment,
                     QuadratureRule rule = QuadratureRule::midpoint);

/// exp of the line integral along the polyline.
LinkFactor path_scale(const GaugeFieldSpec& spec, const PolylinePath& path, int steps_per_segment,
                      QuadratureRule rule = QuadratureRule::midpoint);

/// r_{y,x} along the straight line from x to y.
LinkFactor straight_line_scale(const GaugeFieldSpec& spec, const Point& x, const Point& y, int steps,
                               QuadratureRule rule = QuadratureRule::midpoint);
LinkFactor straight_line_scale(const GaugeFieldSpec& spec, const Point& x, const Point& y,
                               const Quadrature& quad);

/// Per-axis factors r_{y,x,i} = exp(int A_i dz^i) along the straight line;
/// their product is straight_line_scale. Entries past dim() are 1.
std::array<double, kMaxDim> straight_line_axis_factors(const GaugeFieldSpec& spec, const Point& x,
                                                       const Point& y, int steps,
                                                       QuadratureRule rule = QuadratureRule::midpoint);

/// |path_scale(loop) - 1| for a closed loop.
double loop_residual(const GaugeFieldSpec& spec, const PolylinePath& loop, int steps_per_segment,
                     QuadratureRule rule = QuadratureRule::midpoint);

struct IntegrabilityReport {
  bool integrable = true;
  double max_residual = 0.0;
  std::size_t loops_checked = 0;
};

/// Sweeps square plaquettes of side `plaquette_size` on every coordinate
/// plane through `region` and compares each loop residual with `tol`.
/// One-dimensional regions have no plaquettes and are reported integrable.
IntegrabilityReport integrability_check(const GaugeFieldSpec& spec, const Box& region,
                                        double plaquette_size, double tol,
                                        int steps_per_segment = 16,
                                        QuadratureRule rule = QuadratureRule::midpoint);

/// Throws IntegrabilityError unless a Gauss-Legendre plaquette sweep of
/// `region` (plaquette side = smallest extent / 8) finds every loop factor
/// within 1e-8 of 1.
void require_integrable(const GaugeFieldSpec& spec, const Box& region);

}  // namespace nscale
