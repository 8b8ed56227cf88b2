#include "nscale/geometry.hpp"

#include <cmath>
#include <sstream>

#include "nscale/error.hpp"

namespace nscale {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw UsageError("point dimension must be 1, 2 or 3, got " + std::to_string(dim));
  }
}

}  // namespace

Point::Point(int dim) : dim_(dim) { check_dim(dim); }

Point::Point(std::initializer_list<double> coords) : dim_(static_cast<int>(coords.size())) {
  check_dim(dim_);
  std::size_t i = 0;
  for (double c : coords) x_[i++] = c;
}

Point Point::unit(int dim, int axis) {
  Point p(dim);
  if (axis < 0 || axis >= dim) throw UsageError("axis out of range for unit vector");
  p[axis] = 1.0;
  return p;
}

Point& Point::operator+=(const Point& o) {
  require_same_dim(*this, o, "point addition");
  for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(*this, o, "point subtraction");
  for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (int i = 0; i < dim_; ++i) (*this)[i] *= s;
  return *this;
}

double Point::norm() const { return std::sqrt(dot(*this, *this)); }

bool Point::is_finite() const {
  for (int i = 0; i < dim_; ++i) {
    if (!std::isfinite((*this)[i])) return false;
  }
  return dim_ > 0;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << (*this)[i];
  os << ')';
  return os.str();
}

Point operator+(Point a, const Point& b) { return a += b; }
Point operator-(Point a, const Point& b) { return a -= b; }
Point operator*(double s, Point a) { return a *= s; }
Point operator*(Point a, double s) { return a *= s; }

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b, "dot product");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double distance(const Point& a, const Point& b) { return (a - b).norm(); }

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw UsageError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
}

bool Box::contains(const Point& p, double tol) const {
  require_same_dim(lo, p, "box membership");
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] < lo[i] - tol || p[i] > hi[i] + tol) return false;
  }
  return true;
}

bool Box::contains_interior(const Point& p, double tol) const {
  require_same_dim(lo, p, "box membership");
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] <= lo[i] + tol || p[i] >= hi[i] - tol) return false;
  }
  return true;
}

bool Box::on_surface(const Point& p, double tol) const {
  return contains(p, tol) && !contains_interior(p, tol);
}

Box make_box(const Point& lo, const Point& hi) {
  require_same_dim(lo, hi, "box");
  for (int i = 0; i < lo.dim(); ++i) {
    if (!(hi[i] > lo[i])) throw UsageError("box must have hi > lo on every axis");
  }
  return Box{lo, hi};
}

}  // namespace nscale
