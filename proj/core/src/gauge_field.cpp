#include "nscale/gauge_field.hpp"

#include <algorithm>
#include <cmath>

#include "nscale/error.hpp"

namespace nscale {

double ScalarPotential::value(const Point& x) const {
  require_same_dim(linear, x, "potential");
  double g = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    g += linear[i] * x[i] + 0.5 * diagonal[i] * x[i] * x[i];
    if (sine_amp != 0.0) g += sine_amp * std::sin(sine_k * x[i]);
  }
  if (x.dim() >= 2) g += cross * x[0] * x[1];
  return g;
}

Point ScalarPotential::gradient(const Point& x) const {
  require_same_dim(linear, x, "potential gradient");
  Point d(x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    d[i] = linear[i] + diagonal[i] * x[i];
    if (sine_amp != 0.0) d[i] += sine_amp * sine_k * std::cos(sine_k * x[i]);
  }
  if (x.dim() >= 2) {
    d[0] += cross * x[1];
    d[1] += cross * x[0];
  }
  return d;
}

double ScalarPotential::forward_difference(const Point& x, int axis, double h) const {
  require_same_dim(linear, x, "potential difference");
  if (axis < 0 || axis >= x.dim()) throw UsageError("potential difference axis out of range");
  if (!(h > 0.0)) throw UsageError("potential difference step must be positive");
  const double xa = x[axis];
  double d = linear[axis] + diagonal[axis] * (xa + 0.5 * h);
  if (x.dim() >= 2 && axis < 2) d += cross * x[1 - axis];
  if (sine_amp != 0.0) {
    // sin(k(x+h)) - sin(kx) = 2 cos(k(x + h/2)) sin(kh/2)
    d += sine_amp * 2.0 * std::cos(sine_k * (xa + 0.5 * h)) * std::sin(0.5 * sine_k * h) / h;
  }
  return d;
}

ScalarPotential make_potential(int dim) {
  ScalarPotential g;
  g.linear = Point(dim);
  g.diagonal = Point(dim);
  return g;
}

std::string to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::zero: return "zero";
    case FieldKind::constant: return "constant";
    case FieldKind::gradient: return "gradient";
    case FieldKind::rotational: return "rotational";
  }
  return "unknown";
}

FieldKind field_kind_from_string(const std::string& name) {
  if (name == "zero") return FieldKind::zero;
  if (name == "constant") return FieldKind::constant;
  if (name == "gradient") return FieldKind::gradient;
  if (name == "rotational") return FieldKind::rotational;
  throw UsageError("unknown field kind '" + name + "'");
}

GaugeFieldSpec::GaugeFieldSpec(FieldKind kind, int dim, double coupling)
    : kind_(kind), dim_(dim), coupling_(coupling), constant_(dim), potential_(make_potential(dim)) {
  if (!std::isfinite(coupling) || coupling < 0.0) {
    throw DomainError("field coupling must be finite and non-negative");
  }
}

GaugeFieldSpec GaugeFieldSpec::zero(int dim, double coupling) {
  return GaugeFieldSpec(FieldKind::zero, dim, coupling);
}

GaugeFieldSpec GaugeFieldSpec::constant(const Point& c, double coupling) {
  if (!c.is_finite()) throw DomainError("constant field vector must be finite");
  GaugeFieldSpec s(FieldKind::constant, c.dim(), coupling);
  s.constant_ = c;
  return s;
}

GaugeFieldSpec GaugeFieldSpec::gradient(const ScalarPotential& g, double coupling) {
  require_same_dim(g.linear, g.diagonal, "gradient potential");
  GaugeFieldSpec s(FieldKind::gradient, g.dim(), coupling);
  s.potential_ = g;
  return s;
}

GaugeFieldSpec GaugeFieldSpec::rotational(int dim, double strength, int axis_a, int axis_b,
                                          double coupling) {
  if (dim < 2) throw UsageError("rotational field needs at least two dimensions");
  if (axis_a == axis_b || axis_a < 0 || axis_b < 0 || axis_a >= dim || axis_b >= dim) {
    throw UsageError("rotational field plane axes are invalid");
  }
  GaugeFieldSpec s(FieldKind::rotational, dim, coupling);
  s.strength_ = strength;
  s.axis_a_ = axis_a;
  s.axis_b_ = axis_b;
  return s;
}

GaugeFieldSpec GaugeFieldSpec::with_coupling(double coupling) const {
  GaugeFieldSpec s = *this;
  if (!std::isfinite(coupling) || coupling < 0.0) {
    throw DomainError("field coupling must be finite and non-negative");
  }
  s.coupling_ = coupling;
  return s;
}

Point GaugeFieldSpec::eval(const Point& p) const {
  if (p.dim() != dim_) throw UsageError("field evaluated at a point of the wrong dimension");
  Point a(dim_);
  switch (kind_) {
    case FieldKind::zero:
      break;
    case FieldKind::constant:
      a = constant_;
      break;
    case FieldKind::gradient:
      a = potential_.gradient(p);
      break;
    case FieldKind::rotational:
      a[axis_a_] = -strength_ * p[axis_b_];
      a[axis_b_] = strength_ * p[axis_a_];
      break;
  }
  return coupling_ * a;
}

double GaugeFieldSpec::component(const Point& p, int axis) const {
  if (axis < 0 || axis >= dim_) throw UsageError("field component axis out of range");
  switch (kind_) {
    case FieldKind::zero:
      return coupling_ * 0.0;
    case FieldKind::constant:
      return coupling_ * constant_[axis];
    case FieldKind::gradient:
    case FieldKind::rotational:
      break;
  }
  return eval(p)[axis];
}

double GaugeFieldSpec::max_norm_on(const Box& box) const {
  constexpr int kSamples = 16;
  double best = 0.0;
  int total = 1;
  for (int i = 0; i < dim_; ++i) total *= kSamples + 1;
  for (int flat = 0; flat < total; ++flat) {
    Point p(dim_);
    int rest = flat;
    for (int i = 0; i < dim_; ++i) {
      const int k = rest % (kSamples + 1);
      rest /= kSamples + 1;
      p[i] = box.lo[i] + box.extent(i) * k / kSamples;
    }
    best = std::max(best, eval(p).norm());
  }
  return best;
}

Point field_eval(const GaugeFieldSpec& spec, const Point& p) { return spec.eval(p); }

}  // namespace nscale
