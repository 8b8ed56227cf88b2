#pragma once

#include <array>
#include <cmath>
#include <string>

#include "nscale/geometry.hpp"

namespace nscale {

/// Closed-form scalar potential
///   g(x) = a.x + 1/2 sum_i b_i x_i^2 + q x_0 x_1 + s sum_i sin(k x_i)
/// used to build curl-free (integrable) gauge fields A = grad g.
/// The cross term q needs d >= 2 and is ignored otherwise.
struct ScalarPotential {
  Point linear;          // a
  Point diagonal;        // b
  double cross = 0.0;    // q
  double sine_amp = 0.0; // s
  double sine_k = 0.0;   // k

  int dim() const { return linear.dim(); }
  double value(const Point& x) const;
  Point gradient(const Point& x) const;
  /// (g(x + h e_axis) - g(x)) / h in closed form, so a purely linear g
  /// gives exactly a_axis with no cancellation.
  double forward_difference(const Point& x, int axis, double h) const;

  friend bool operator==(const ScalarPotential&, const ScalarPotential&) = default;
};

ScalarPotential make_potential(int dim);

enum class FieldKind { zero, constant, gradient, rotational };

std::string to_string(FieldKind kind);
FieldKind field_kind_from_string(const std::string& name);

/// Real vector field A(x) on R^d together with a coupling g_r >= 0 that
/// multiplies it everywhere. Immutable.
class GaugeFieldSpec {
 public:
  static GaugeFieldSpec zero(int dim, double coupling = 1.0);
  static GaugeFieldSpec constant(const Point& c, double coupling = 1.0);
  static GaugeFieldSpec gradient(const ScalarPotential& g, double coupling = 1.0);
  /// A = c * (-x_b, x_a) in the (a, b) plane, zero along other axes.
  /// Its circulation around any loop in that plane is 2 c * area.
  static GaugeFieldSpec rotational(int dim, double strength, int axis_a = 0, int axis_b = 1,
                                   double coupling = 1.0);

  FieldKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double coupling() const { return coupling_; }
  const Point& constant_vector() const { return constant_; }
  const ScalarPotential& potential() const { return potential_; }
  double strength() const { return strength_; }
  int plane_a() const { return axis_a_; }
  int plane_b() const { return axis_b_; }

  GaugeFieldSpec with_coupling(double coupling) const;

  /// g_r * A(p).
  Point eval(const Point& p) const;
  /// g_r * A_axis(p).
  double component(const Point& p, int axis) const;
  /// g_r A(a + t d) . d with no checks or temporaries; the kernel of every
  /// line integral. Same arithmetic as dot(eval(a + t * d), d).
  double directional(const Point& a, const Point& d, double t) const;

  /// Largest |g_r A| over the box, evaluated on the corners and a coarse
  /// interior lattice. Exact for zero, constant and rotational fields.
  double max_norm_on(const Box& box) const;

  friend bool operator==(const GaugeFieldSpec&, const GaugeFieldSpec&) = default;

 private:
  GaugeFieldSpec(FieldKind kind, int dim, double coupling);

  FieldKind kind_ = FieldKind::zero;
  int dim_ = 1;
  double coupling_ = 1.0;
  Point constant_;
  ScalarPotential potential_;
  double strength_ = 0.0;
  int axis_a_ = 0;
  int axis_b_ = 1;
};

Point field_eval(const GaugeFieldSpec& spec, const Point& p);

inline double GaugeFieldSpec::directional(const Point& a, const Point& d, double t) const {
  std::array<double, kMaxDim> p{}, v{};
  for (int i = 0; i < dim_; ++i) p[static_cast<std::size_t>(i)] = a[i] + d[i] * t;
  switch (kind_) {
    case FieldKind::zero:
      break;
    case FieldKind::constant:
      for (int i = 0; i < dim_; ++i) v[static_cast<std::size_t>(i)] = constant_[i];
      break;
    case FieldKind::gradient: {
      const ScalarPotential& g = potential_;
      for (int i = 0; i < dim_; ++i) {
        const auto k = static_cast<std::size_t>(i);
        v[k] = g.linear[i] + g.diagonal[i] * p[k];
        if (g.sine_amp != 0.0) v[k] += g.sine_amp * g.sine_k * std::cos(g.sine_k * p[k]);
      }
      if (dim_ >= 2) {
        v[0] += g.cross * p[1];
        v[1] += g.cross * p[0];
      }
      break;
    }
    case FieldKind::rotational:
      v[static_cast<std::size_t>(axis_a_)] = -strength_ * p[static_cast<std::size_t>(axis_b_)];
      v[static_cast<std::size_t>(axis_b_)] = strength_ * p[static_cast<std::size_t>(axis_a_)];
      break;
  }
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += v[static_cast<std::size_t>(i)] * coupling_ * d[i];
  return s;
}

}  // namespace nscale
