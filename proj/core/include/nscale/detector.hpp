#pragma once

#include <cstddef>
#include <string>

#include "nscale/quantum_scaling.hpp"

namespace nscale {

enum class AnchorRule {
  minimal_corner,  // z = (j, k, l) * delta + lo
  face_center      // centre of the cube face with the smallest axis-0 coordinate
};

std::string to_string(AnchorRule rule);
AnchorRule anchor_rule_from_string(const std::string& name);

/// Tiling of a grid's box into cubes of side delta. Every cube holds a
/// whole number of grid cells on each axis.
class DetectorPartition {
 public:
  static DetectorPartition make(const Grid& grid, double delta,
                                AnchorRule rule = AnchorRule::minimal_corner);

  double delta() const { return delta_; }
  AnchorRule anchor_rule() const { return rule_; }
  const Grid& grid() const { return grid_; }
  int cubes_per_axis(int axis) const { return cubes_[static_cast<std::size_t>(axis)]; }
  std::size_t cube_count() const;
  /// Cells of the grid along one edge of a cube.
  int cells_per_cube(int axis) const { return grid_.n(axis) / cubes_per_axis(axis); }

  /// Flat cube index of grid point `flat` (axis 0 fastest).
  std::size_t cube_of(std::size_t flat) const;
  Index3 cube_index(std::size_t cube) const;
  Point anchor(std::size_t cube) const;
  Box cube_box(std::size_t cube) const;

 private:
  DetectorPartition(const Grid& grid, double delta, AnchorRule rule, const Index3& cubes);
  Grid grid_;
  double delta_;
  AnchorRule rule_;
  Index3 cubes_;
};

/// amp'(y) = r_{y, z(cube(y))} amp(y). Cross-cube transport to x0 is the
/// identity on values, so x0 only documents where the sum is taken.
WavePacket detector_packet(const WavePacket& psi, const GaugeFieldSpec& field,
                           const DetectorPartition& partition, const Point& x0,
                           const Quadrature& quad = {});

/// Per-cube sums of r_{y,z} y |amp|^2 h^d, added over cubes.
ScaledExpectation detector_expectation(const WavePacket& psi, const GaugeFieldSpec& field,
                                       const DetectorPartition& partition, ExpectationMode mode,
                                       const Quadrature& quad = {});

/// Largest |r - 1| over all grid points for the partition's in-cube factors.
double max_in_cube_deviation(const GaugeFieldSpec& field, const DetectorPartition& partition,
                             const Quadrature& quad = {});

}  // namespace nscale
