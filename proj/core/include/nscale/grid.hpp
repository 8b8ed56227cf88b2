#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "nscale/geometry.hpp"

namespace nscale {

using Index3 = std::array<int, kMaxDim>;

/// Uniform periodic grid over an axis-aligned box. Samples sit at cell
/// centres, y_i = lo + (i + 1/2) h, so no sample lies on a cell or
/// detector-cube boundary. Flat indices run with axis 0 fastest.
class Grid {
 public:
  static constexpr int kMinPoints = 4;
  static constexpr std::array<int, kMaxDim> kMaxPoints = {4096, 512, 64};

  static Grid make(const Box& box, const Index3& n);
  /// Same [lo, hi] and n on every axis.
  static Grid cube(int dim, double lo, double hi, int n);

  int dim() const { return box_.dim(); }
  const Box& box() const { return box_; }
  int n(int axis) const { return n_[static_cast<std::size_t>(axis)]; }
  double h(int axis) const { return box_.extent(axis) / n(axis); }
  double lo(int axis) const { return box_.lo[axis]; }
  double length(int axis) const { return box_.extent(axis); }
  std::size_t size() const { return size_; }
  /// Product of the spacings, h^d.
  double cell_volume() const { return cell_volume_; }

  Index3 index(std::size_t flat) const;
  std::size_t flat(const Index3& idx) const;
  Point point(std::size_t flat) const;
  double coordinate(int axis, int i) const { return lo(axis) + (i + 0.5) * h(axis); }
  /// Periodic neighbour `step` cells along `axis`.
  std::size_t neighbor(std::size_t flat, int axis, int step) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Grid(const Box& box, const Index3& n);
  Box box_;
  Index3 n_{1, 1, 1};
  std::size_t size_ = 0;
  double cell_volume_ = 0.0;
};

using Amplitudes = std::vector<std::complex<double>>;

/// Complex amplitudes sampled on a grid. Immutable once built.
class WavePacket {
 public:
  WavePacket(Grid grid, Amplitudes amp);

  const Grid& grid() const { return grid_; }
  const Amplitudes& amplitudes() const { return amp_; }
  std::complex<double> operator[](std::size_t i) const { return amp_[i]; }
  std::size_t size() const { return amp_.size(); }

  friend bool operator==(const WavePacket&, const WavePacket&) = default;

 private:
  Grid grid_;
  Amplitudes amp_;
};

}  // namespace nscale
