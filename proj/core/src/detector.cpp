#include "nscale/detector.hpp"

#include <algorithm>
#include <cmath>

#include "nscale/error.hpp"
#include "nscale/numeric.hpp"

namespace nscale {

namespace {

// Nearest integer to x when x is within a relative 1e-9 of it, else -1.
int exact_ratio(double x) {
  const double k = std::round(x);
  if (k < 1.0 || std::abs(x - k) > 1e-9 * k) return -1;
  return static_cast<int>(k);
}

}  // namespace

std::string to_string(AnchorRule rule) {
  return rule == AnchorRule::minimal_corner ? "corner" : "face-center";
}

AnchorRule anchor_rule_from_string(const std::string& name) {
  if (name == "corner" || name == "minimal-corner") return AnchorRule::minimal_corner;
  if (name == "face-center" || name == "face") return AnchorRule::face_center;
  throw UsageError("unknown anchor rule '" + name + "'");
}

DetectorPartition::DetectorPartition(const Grid& grid, double delta, AnchorRule rule, const Index3& cubes)
    : grid_(grid), delta_(delta), rule_(rule), cubes_(cubes) {}

DetectorPartition DetectorPartition::make(const Grid& grid, double delta, AnchorRule rule) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw UsageError("detector cube side must be positive");
  Index3 cubes{1, 1, 1};
  for (int a = 0; a < grid.dim(); ++a) {
    const int count = exact_ratio(grid.length(a) / delta);
    if (count < 0) {
      throw UsageError("detector cube side " + std::to_string(delta) +
                       " does not divide the grid extent on axis " + std::to_string(a));
    }
    if (grid.n(a) % count != 0) {
      throw UsageError("detector cube side " + std::to_string(delta) +
                       " is not a whole number of grid cells on axis " + std::to_string(a));
    }
    cubes[static_cast<std::size_t>(a)] = count;
  }
  return DetectorPartition(grid, delta, rule, cubes);
}

std::size_t DetectorPartition::cube_count() const {
  std::size_t c = 1;
  for (int a = 0; a < grid_.dim(); ++a) c *= static_cast<std::size_t>(cubes_per_axis(a));
  return c;
}

std::size_t DetectorPartition::cube_of(std::size_t flat) const {
  const Index3 idx = grid_.index(flat);
  std::size_t c = 0;
  for (int a = grid_.dim() - 1; a >= 0; --a) {
    c = c * static_cast<std::size_t>(cubes_per_axis(a)) +
        static_cast<std::size_t>(idx[static_cast<std::size_t>(a)] / cells_per_cube(a));
  }
  return c;
}

Index3 DetectorPartition::cube_index(std::size_t cube) const {
  Index3 idx{0, 0, 0};
  for (int a = 0; a < grid_.dim(); ++a) {
    const auto count = static_cast<std::size_t>(cubes_per_axis(a));
    idx[static_cast<std::size_t>(a)] = static_cast<int>(cube % count);
    cube /= count;
  }
  return idx;
}

Box DetectorPartition::cube_box(std::size_t cube) const {
  const Index3 idx = cube_index(cube);
  Point lo(grid_.dim()), hi(grid_.dim());
  for (int a = 0; a < grid_.dim(); ++a) {
    const double side = grid_.length(a) / cubes_per_axis(a);
    lo[a] = grid_.lo(a) + idx[static_cast<std::size_t>(a)] * side;
    hi[a] = lo[a] + side;
  }
  return Box{lo, hi};
}

Point DetectorPartition::anchor(std::size_t cube) const {
  const Box b = cube_box(cube);
  Point z = b.lo;
  if (rule_ == AnchorRule::face_center) {
    for (int a = 1; a < grid_.dim(); ++a) z[a] = 0.5 * (b.lo[a] + b.hi[a]);
  }
  return z;
}

namespace {

std::vector<double> in_cube_factors(const Grid& g, const GaugeFieldSpec& field,
                                    const DetectorPartition& partition, const Quadrature& quad) {
  if (!(partition.grid() == g)) throw UsageError("detector partition was built for a different grid");
  if (field.dim() != g.dim()) throw UsageError("field and grid dimensions differ");
  require_integrable(field, g.box());
  std::vector<Point> anchors(partition.cube_count());
  for (std::size_t c = 0; c < anchors.size(); ++c) anchors[c] = partition.anchor(c);
  std::vector<double> r(g.size(), 1.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point y = g.point(i);
    const Point& z = anchors[partition.cube_of(i)];
    if (y == z) continue;
    r[i] = straight_line_scale(field, z, y, quad).value;
  }
  return r;
}

}  // namespace

WavePacket detector_packet(const WavePacket& psi, const GaugeFieldSpec& field,
                           const DetectorPartition& partition, const Point& x0, const Quadrature& quad) {
  if (x0.dim() != psi.grid().dim()) throw UsageError("base point and grid dimensions differ");
  const auto r = in_cube_factors(psi.grid(), field, partition, quad);
  Amplitudes amp(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) amp[i] = r[i] * psi[i];
  return WavePacket(psi.grid(), std::move(amp));
}

ScaledExpectation detector_expectation(const WavePacket& psi, const GaugeFieldSpec& field,
                                       const DetectorPartition& partition, ExpectationMode mode,
                                       const Quadrature& quad) {
  const Grid& g = psi.grid();
  const auto r = in_cube_factors(g, field, partition, quad);

  // Bucket grid points by cube, keeping grid order inside each cube, so a
  // single-cube partition reduces in exactly the order of the unpartitioned sum.
  // With every factor equal to 1 the partition is irrelevant and one bucket
  // keeps the result bit-identical to the standard expectation.
  const bool trivial = std::all_of(r.begin(), r.end(), [](double v) { return v == 1.0; });
  std::vector<std::vector<std::size_t>> members(trivial ? 1 : partition.cube_count());
  for (std::size_t i = 0; i < g.size(); ++i) members[trivial ? 0 : partition.cube_of(i)].push_back(i);

  auto reduce = [&](auto&& term) {
    std::vector<double> per_cube(members.size());
    std::vector<double> buf;
    for (std::size_t c = 0; c < members.size(); ++c) {
      buf.clear();
      for (std::size_t i : members[c]) buf.push_back(term(i));
      per_cube[c] = pairwise_sum(buf);
    }
    return pairwise_sum(per_cube);
  };

  ScaledExpectation out{Point(g.dim()), 0.0};
  out.scaled_norm = reduce([&](std::size_t i) { return r[i] * (std::norm(psi[i]) * g.cell_volume()); });
  if (!(out.scaled_norm > 0.0)) throw UsageError("detector expectation of a zero-norm packet");
  for (int a = 0; a < g.dim(); ++a) {
    const double raw = reduce([&](std::size_t i) {
      return r[i] * (g.point(i)[a] * (std::norm(psi[i]) * g.cell_volume()));
    });
    out.value[a] = mode == ExpectationMode::raw ? raw : raw / out.scaled_norm;
  }
  return out;
}

double max_in_cube_deviation(const GaugeFieldSpec& field, const DetectorPartition& partition,
                             const Quadrature& quad) {
  const auto r = in_cube_factors(partition.grid(), field, partition, quad);
  double worst = 0.0;
  for (double v : r) worst = std::max(worst, std::abs(v - 1.0));
  return worst;
}

}  // namespace nscale
