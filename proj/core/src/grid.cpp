#include "nscale/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nscale/error.hpp"

namespace nscale {

Grid::Grid(const Box& box, const Index3& n) : box_(box), n_(n) {
  size_ = 1;
  cell_volume_ = 1.0;
  for (int a = 0; a < std::min(dim(), kMaxDim); ++a) {
    size_ *= static_cast<std::size_t>(this->n(a));
    cell_volume_ *= h(a);
  }
}

Grid Grid::make(const Box& box, const Index3& n) {
  const int d = box.dim();
  if (d < 1 || d > kMaxDim) throw UsageError("grid dimension must be 1, 2 or 3");
  Index3 used{1, 1, 1};
  for (int a = 0; a < d; ++a) {
    const int na = n[static_cast<std::size_t>(a)];
    if (na < kMinPoints) throw UsageError("grid needs at least 4 points per axis");
    if (na > kMaxPoints[static_cast<std::size_t>(d - 1)]) {
      throw UsageError("grid of dimension " + std::to_string(d) + " allows at most " +
                       std::to_string(kMaxPoints[static_cast<std::size_t>(d - 1)]) +
                       " points per axis");
    }
    if (!(box.extent(a) > 0.0) || !std::isfinite(box.extent(a))) {
      throw UsageError("grid extent must be finite and positive");
    }
    used[static_cast<std::size_t>(a)] = na;
  }
  return Grid(box, used);
}

Grid Grid::cube(int dim, double lo, double hi, int n) {
  Point plo(dim), phi(dim);
  Index3 counts{1, 1, 1};
  for (int a = 0; a < dim; ++a) {
    plo[a] = lo;
    phi[a] = hi;
    counts[static_cast<std::size_t>(a)] = n;
  }
  return make(make_box(plo, phi), counts);
}

Index3 Grid::index(std::size_t flat) const {
  Index3 idx{0, 0, 0};
  for (int a = 0; a < dim(); ++a) {
    const auto na = static_cast<std::size_t>(n(a));
    idx[static_cast<std::size_t>(a)] = static_cast<int>(flat % na);
    flat /= na;
  }
  return idx;
}

std::size_t Grid::flat(const Index3& idx) const {
  std::size_t f = 0;
  for (int a = dim() - 1; a >= 0; --a) {
    f = f * static_cast<std::size_t>(n(a)) + static_cast<std::size_t>(idx[static_cast<std::size_t>(a)]);
  }
  return f;
}

Point Grid::point(std::size_t flat) const {
  const Index3 idx = index(flat);
  Point p(dim());
  for (int a = 0; a < dim(); ++a) p[a] = coordinate(a, idx[static_cast<std::size_t>(a)]);
  return p;
}

std::size_t Grid::neighbor(std::size_t flat, int axis, int step) const {
  Index3 idx = index(flat);
  const int na = n(axis);
  int& i = idx[static_cast<std::size_t>(axis)];
  i = ((i + step) % na + na) % na;
  return this->flat(idx);
}

WavePacket::WavePacket(Grid grid, Amplitudes amp) : grid_(std::move(grid)), amp_(std::move(amp)) {
  if (amp_.size() != grid_.size()) {
    throw UsageError("wave packet has " + std::to_string(amp_.size()) + " amplitudes for a grid of " +
                     std::to_string(grid_.size()) + " points");
  }
  for (const auto& a : amp_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw DomainError("wave packet amplitude is not finite");
    }
  }
}

}  // namespace nscale
