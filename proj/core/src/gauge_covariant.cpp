#include "nscale/gauge_covariant.hpp"

#include <cmath>

#include "nscale/error.hpp"
#include "nscale/gauge_paths.hpp"

namespace nscale {

namespace {

using namespace std::complex_literals;

const std::array<Eigen::Matrix2cd, 3>& pauli() {
  static const std::array<Eigen::Matrix2cd, 3> s = [] {
    std::array<Eigen::Matrix2cd, 3> m;
    m[0] << 0.0, 1.0, 1.0, 0.0;
    m[1] << 0.0, -1.0i, 1.0i, 0.0;
    m[2] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  return s;
}

void check_grid(const Grid& g) {
  if (g.dim() > 2) throw UsageError("internal fields live on 1D or 2D grids");
}

}  // namespace

LatticeVectorField::LatticeVectorField(const Grid& grid)
    : grid_(grid), data_(grid.size() * static_cast<std::size_t>(kMaxDim), 0.0) {}

LatticeVectorField LatticeVectorField::sample(const Grid& grid, const GaugeFieldSpec& spec) {
  if (spec.dim() != grid.dim()) throw UsageError("potential and grid dimensions differ");
  LatticeVectorField f(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point v = spec.eval(grid.point(i));
    for (int a = 0; a < grid.dim(); ++a) f(i, a) = v[a];
  }
  return f;
}

bool LatticeVectorField::is_zero() const {
  for (double v : data_) {
    if (v != 0.0) return false;
  }
  return true;
}

InternalField::InternalField(Grid grid, int components, std::vector<std::complex<double>> values)
    : grid_(std::move(grid)), n_(components), values_(std::move(values)) {
  check_grid(grid_);
  if (n_ != 1 && n_ != 2) throw UsageError("internal dimension must be 1 or 2");
  if (values_.size() != grid_.size() * static_cast<std::size_t>(n_)) {
    throw UsageError("internal field has the wrong number of values");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("internal field component is not finite");
    }
  }
}

InternalField InternalField::from_packet(const WavePacket& psi) {
  return InternalField(psi.grid(), 1, psi.amplitudes());
}

Eigen::VectorXcd InternalField::at(std::size_t site) const {
  Eigen::VectorXcd v(n_);
  for (int c = 0; c < n_; ++c) v(c) = (*this)(site, c);
  return v;
}

GaugePotentials GaugePotentials::make(const Grid& grid, int components, const GaugeFieldSpec& scaling,
                                      double g1, const GaugeFieldSpec& xi_spec, double g2,
                                      const std::array<GaugeFieldSpec, 3>* omega_specs) {
  check_grid(grid);
  if (components != 1 && components != 2) throw UsageError("internal dimension must be 1 or 2");
  if (g1 < 0.0 || g2 < 0.0 || !std::isfinite(g1) || !std::isfinite(g2)) {
    throw DomainError("gauge couplings must be finite and non-negative");
  }
  if (scaling.dim() != grid.dim()) throw UsageError("scaling field and grid dimensions differ");
  GaugePotentials p;
  p.scaling = scaling;
  p.g1 = g1;
  p.g2 = g2;
  p.components = components;
  p.xi = LatticeVectorField::sample(grid, xi_spec);
  for (auto& o : p.omega) o = LatticeVectorField(grid);
  if (omega_specs != nullptr) {
    if (components != 2) throw UsageError("SU(2) potentials need a two-component field");
    for (std::size_t j = 0; j < 3; ++j) p.omega[j] = LatticeVectorField::sample(grid, (*omega_specs)[j]);
  }
  return p;
}

U1Transform U1Transform::identity(int dim) { return U1Transform{make_potential(dim), 0.0}; }

U1Transform U1Transform::constant(int dim, double c) { return U1Transform{make_potential(dim), c}; }

U1Transform U1Transform::linear(const Point& k) {
  U1Transform t{make_potential(k.dim()), 0.0};
  t.shape.linear = k;
  return t;
}

U1Transform U1Transform::sine(int dim, double amp, double k) {
  U1Transform t{make_potential(dim), 0.0};
  t.shape.sine_amp = amp;
  t.shape.sine_k = k;
  return t;
}

Eigen::MatrixXcd v_link(const GaugePotentials& pot, std::size_t site, int axis, double dx) {
  if (!(dx > 0.0)) throw UsageError("v_link step must be positive");
  const std::complex<double> u1 = std::polar(1.0, pot.g1 * pot.xi(site, axis) * dx);
  if (pot.components == 1) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = u1;
    return m;
  }
  // exp(i w.sigma / 2) = cos(|w|/2) I + i sin(|w|/2) w.sigma / |w|
  std::array<double, 3> w{};
  double theta = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    w[j] = pot.g2 * pot.omega[j](site, axis) * dx;
    theta += w[j] * w[j];
  }
  theta = std::sqrt(theta);
  Eigen::Matrix2cd su2 = Eigen::Matrix2cd::Identity() * std::cos(0.5 * theta);
  if (theta > 0.0) {
    const double s = std::sin(0.5 * theta) / theta;
    for (std::size_t j = 0; j < 3; ++j) su2 += (1.0i * s * w[j]) * pauli()[j];
  }
  return u1 * su2;
}

InternalField covariant_derivative(const InternalField& field, const GaugePotentials& pot, int axis,
                                   DerivativeForm form) {
  const Grid& g = field.grid();
  if (!(pot.xi.grid() == g)) throw UsageError("potentials were sampled on a different grid");
  if (pot.components != field.components()) throw UsageError("internal dimensions differ");
  if (axis < 0 || axis >= g.dim()) throw UsageError("derivative axis out of range");
  const double h = g.h(axis);
  const int n = field.components();
  const Point e = Point::unit(g.dim(), axis);
  std::vector<std::complex<double>> out(field.values().size());

  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t nb = g.neighbor(i, axis, 1);
    const Point x = g.point(i);
    if (form == DerivativeForm::exact_link) {
      const double r = link_scale(pot.scaling, x, e, h).value;
      const Eigen::MatrixXcd v = v_link(pot, i, axis, h);
      if (n == 1) {
        out[i] = (r * (v(0, 0) * field(nb, 0)) - field(i, 0)) / h;
      } else {
        const Eigen::VectorXcd moved = v * field.at(nb);
        for (int c = 0; c < n; ++c) {
          out[i * 2 + static_cast<std::size_t>(c)] = (r * moved(c) - field(i, c)) / h;
        }
      }
      continue;
    }
    const double a = pot.scaling.component(x, axis);
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Identity(n, n) * (1.0i * pot.g1 * pot.xi(i, axis));
    if (n == 2) {
      for (std::size_t j = 0; j < 3; ++j) gen += (1.0i * pot.g2 * pot.omega[j](i, axis)) * pauli()[j] * 0.5;
    }
    const Eigen::VectorXcd here = field.at(i);
    const Eigen::VectorXcd rot = gen * here;
    for (int c = 0; c < n; ++c) {
      const auto k = i * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
      out[k] = (field(nb, c) - field(i, c)) / h + a * field(i, c) + rot(c);
    }
  }
  return InternalField(g, n, std::move(out));
}

std::pair<InternalField, GaugePotentials> u1_transform(const InternalField& field,
                                                       const GaugePotentials& pot,
                                                       const U1Transform& t) {
  if (!(pot.g1 > 0.0)) throw UsageError("U(1) transformation needs g1 > 0");
  const Grid& g = field.grid();
  if (t.shape.dim() != g.dim()) throw UsageError("transformation and grid dimensions differ");
  std::vector<std::complex<double>> values(field.values().size());
  const auto n = static_cast<std::size_t>(field.components());
  GaugePotentials out = pot;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    const double phi = t.phi(x);
    const std::complex<double> lambda = std::polar(1.0, phi);
    for (std::size_t c = 0; c < n; ++c) values[i * n + c] = lambda * field.values()[i * n + c];
    for (int a = 0; a < g.dim(); ++a) {
      const double dphi = t.shape.forward_difference(x, a, g.h(a));
      out.xi(i, a) = pot.xi(i, a) - dphi / pot.g1;
    }
  }
  return {InternalField(g, field.components(), std::move(values)), out};
}

double gauge_invariance_residual(const InternalField& field, const GaugePotentials& pot,
                                 const U1Transform& t, int axis, DerivativeForm form) {
  const auto [moved, moved_pot] = u1_transform(field, pot, t);
  const InternalField lhs = covariant_derivative(moved, moved_pot, axis, form);
  const InternalField d = covariant_derivative(field, pot, axis, form);
  const Grid& g = field.grid();
  const auto n = static_cast<std::size_t>(field.components());
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::complex<double> lambda = std::polar(1.0, t.phi(g.point(i)));
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t k = i * n + c;
      worst = std::max(worst, std::abs(lhs.values()[k] - lambda * d.values()[k]));
    }
  }
  return worst;
}

double max_unitarity_defect(const GaugePotentials& pot) {
  const Grid& g = pot.xi.grid();
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (int a = 0; a < g.dim(); ++a) {
      const Eigen::MatrixXcd v = v_link(pot, i, a, g.h(a));
      const Eigen::MatrixXcd defect = v.adjoint() * v - Eigen::MatrixXcd::Identity(v.rows(), v.cols());
      worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace nscale
