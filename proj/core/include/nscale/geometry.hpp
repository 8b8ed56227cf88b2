#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace nscale {

inline constexpr int kMaxDim = 3;

/// A point (or displacement) in R^d, d in {1,2,3}. The dimension travels
/// with the value; arithmetic between points of different dimension throws
/// UsageError.
class Point {
 public:
  Point() = default;
  explicit Point(int dim);
  Point(std::initializer_list<double> coords);

  static Point unit(int dim, int axis);

  int dim() const { return dim_; }
  double operator[](int axis) const { return x_[static_cast<std::size_t>(axis)]; }
  double& operator[](int axis) { return x_[static_cast<std::size_t>(axis)]; }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);

  double norm() const;
  bool is_finite() const;

  friend bool operator==(const Point&, const Point&) = default;

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::array<double, kMaxDim> x_{};
};

Point operator+(Point a, const Point& b);
Point operator-(Point a, const Point& b);
Point operator*(double s, Point a);
Point operator*(Point a, double s);
double dot(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

// Throws UsageError unless both points share a dimension.
void require_same_dim(const Point& a, const Point& b, const char* what);

/// Closed axis-aligned box [lo, hi].
struct Box {
  Point lo;
  Point hi;

  int dim() const { return lo.dim(); }
  double extent(int axis) const { return hi[axis] - lo[axis]; }
  bool contains(const Point& p, double tol = 0.0) const;
  bool contains_interior(const Point& p, double tol = 0.0) const;
  bool on_surface(const Point& p, double tol = 1e-12) const;

  friend bool operator==(const Box&, const Box&) = default;
};

Box make_box(const Point& lo, const Point& hi);

}  // namespace nscale
