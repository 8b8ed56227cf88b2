#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "nscale/error.hpp"
#include "nscale/gauge_covariant.hpp"
#include "nscale/numeric.hpp"
#include "nscale/quantum_scaling.hpp"
#include "oracles.hpp"
#include "textbook.hpp"

using namespace nscale;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

ScalarPotential wavy(int dim) {
  ScalarPotential g = make_potential(dim);
  for (int i = 0; i < dim; ++i) g.linear[i] = 0.3 - 0.2 * i;
  g.sine_amp = 0.4;
  g.sine_k = 0.9;
  return g;
}

std::array<GaugeFieldSpec, 3> su2_specs(int dim) {
  Point a(dim), b(dim);
  for (int i = 0; i < dim; ++i) {
    a[i] = 0.5 + 0.1 * i;
    b[i] = -0.7;
  }
  ScalarPotential g = make_potential(dim);
  g.diagonal[0] = 0.2;
  return {GaugeFieldSpec::constant(a), GaugeFieldSpec::constant(b), GaugeFieldSpec::gradient(g)};
}

InternalField random_field(const Grid& g, int comps, unsigned long long seed) {
  auto gen = oracle::rng(seed);
  std::vector<cd> v(g.size() * static_cast<std::size_t>(comps));
  for (auto& x : v) x = oracle::random_complex(gen, 0.1, 1.0);
  return InternalField(g, comps, std::move(v));
}

// Smooth, periodic two-component field for convergence sweeps.
InternalField smooth_field(const Grid& g, int comps) {
  std::vector<cd> v;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    double s = 0.0;
    for (int a = 0; a < g.dim(); ++a) s += std::sin(2.0 * kPi * x[a] / g.length(a));
    v.push_back(std::polar(1.0 + 0.3 * s, 0.5 * s));
    if (comps == 2) v.push_back(cd(0.4 * std::cos(s), -0.2));
  }
  return InternalField(g, comps, std::move(v));
}

}  // namespace

TEST_CASE("internal field construction") {
  const Grid g1 = Grid::cube(1, 0.0, 1.0, 8);
  CHECK_THROWS_AS(InternalField(Grid::cube(3, 0.0, 1.0, 4), 1, std::vector<cd>(64)), UsageError);
  CHECK_THROWS_AS(InternalField(g1, 3, std::vector<cd>(24)), UsageError);
  CHECK_THROWS_AS(InternalField(g1, 2, std::vector<cd>(8)), UsageError);
  std::vector<cd> bad(8);
  bad[3] = cd(std::nan(""), 0.0);
  CHECK_THROWS_AS(InternalField(g1, 1, bad), DomainError);
  const WavePacket psi = gaussian_packet(g1, Point{0.5}, 0.3, Point{0.0});
  const auto f = InternalField::from_packet(psi);
  CHECK(f.components() == 1);
  CHECK(f.values() == psi.amplitudes());
  CHECK_THROWS_AS(GaugePotentials::make(g1, 1, GaugeFieldSpec::zero(1), -1.0, GaugeFieldSpec::zero(1)),
                  DomainError);
  auto specs = su2_specs(1);
  CHECK_THROWS_AS(GaugePotentials::make(g1, 1, GaugeFieldSpec::zero(1), 1.0, GaugeFieldSpec::zero(1), 1.0,
                                        &specs),
                  UsageError);
}

TEST_CASE("v_link matches the matrix exponential") {
  const Grid g = Grid::cube(2, -1.0, 1.0, 8);
  const auto specs = su2_specs(2);
  const auto pot = GaugePotentials::make(g, 2, GaugeFieldSpec::zero(2), 0.8,
                                         GaugeFieldSpec::gradient(wavy(2)), 1.3, &specs);
  const Eigen::Matrix2cd sx{{0, 1}, {1, 0}}, sy{{0, cd(0, -1)}, {cd(0, 1), 0}}, sz{{1, 0}, {0, -1}};
  const std::array<Eigen::Matrix2cd, 3> sigma{sx, sy, sz};
  for (std::size_t i = 0; i < g.size(); i += 7) {
    for (int axis = 0; axis < 2; ++axis) {
      const double dx = g.h(axis);
      Eigen::Matrix2cd gen = Eigen::Matrix2cd::Zero();
      for (std::size_t j = 0; j < 3; ++j) gen += cd(0, pot.g2 * pot.omega[j](i, axis) * dx) * sigma[j] * 0.5;
      const Eigen::Matrix2cd expect = std::polar(1.0, pot.g1 * pot.xi(i, axis) * dx) * gen.exp();
      const Eigen::MatrixXcd v = v_link(pot, i, axis, dx);
      CHECK((v - expect).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(std::abs(v.determinant() - std::polar(1.0, 2.0 * pot.g1 * pot.xi(i, axis) * dx)) < 1e-14);
    }
  }
  CHECK(max_unitarity_defect(pot) < 1e-14);
  CHECK_THROWS_AS(v_link(pot, 0, 0, 0.0), UsageError);
}

TEST_CASE("reductions to plain and single-group derivatives") {
  const Grid g = Grid::cube(2, 0.0, 4.0, 16);
  const WavePacket psi = gaussian_packet(g, Point{2.0, 1.5}, 0.7, Point{0.5, 0.0});
  const auto field = InternalField::from_packet(psi);
  const auto bare = GaugePotentials::make(g, 1, GaugeFieldSpec::zero(2), 0.0, GaugeFieldSpec::zero(2));
  for (int axis = 0; axis < 2; ++axis) {
    CHECK(covariant_derivative(field, bare, axis).values() == textbook::forward_difference(psi, axis));
  }

  // Pure scaling field: exact-link form is the scaled forward difference.
  const double alpha = 0.2;
  const auto scaled = GaugePotentials::make(g, 1, GaugeFieldSpec::constant({alpha, 0.0}), 0.0,
                                            GaugeFieldSpec::zero(2));
  const auto d = covariant_derivative(field, scaled, 0);
  const double h = g.h(0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cd expect = (std::exp(alpha * h) * psi[g.neighbor(i, 0, 1)] - psi[i]) / h;
    CHECK(std::abs(d(i, 0) - expect) < 1e-13);
  }

  // Two components with g2 = 0 are two copies of the U(1) derivative.
  const auto two = random_field(g, 2, 9);
  const auto xi = GaugeFieldSpec::gradient(wavy(2));
  const auto u1_only = GaugePotentials::make(g, 2, GaugeFieldSpec::zero(2), 0.6, xi);
  const auto u1_one = GaugePotentials::make(g, 1, GaugeFieldSpec::zero(2), 0.6, xi);
  const auto d2 = covariant_derivative(two, u1_only, 1);
  for (int c = 0; c < 2; ++c) {
    std::vector<cd> comp;
    for (std::size_t i = 0; i < g.size(); ++i) comp.push_back(two(i, c));
    const auto d1 = covariant_derivative(InternalField(g, 1, comp), u1_one, 1);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(d2(i, c) - d1(i, 0)) < 1e-14);
  }
}

TEST_CASE("first-order form approaches the exact-link form") {
  const auto specs = su2_specs(1);
  std::vector<double> errs;
  for (int n : {32, 64, 128, 256}) {
    const Grid g = Grid::cube(1, 0.0, 2.0, n);
    const auto pot = GaugePotentials::make(g, 2, GaugeFieldSpec::constant({0.3}), 0.5,
                                           GaugeFieldSpec::gradient(wavy(1)), 0.7, &specs);
    const auto f = smooth_field(g, 2);
    const auto exact = covariant_derivative(f, pot, 0, DerivativeForm::exact_link);
    const auto first = covariant_derivative(f, pot, 0, DerivativeForm::first_order);
    double worst = 0.0;
    for (std::size_t k = 0; k < exact.values().size(); ++k) {
      worst = std::max(worst, std::abs(exact.values()[k] - first.values()[k]));
    }
    errs.push_back(worst);
  }
  for (double order : halving_orders(errs)) CHECK(order >= 0.9);
}

TEST_CASE("U(1) transformation: trivial, global and linear phases") {
  const Grid g = Grid::cube(2, 0.0, 2.0, 16);
  const auto f = random_field(g, 1, 3);
  const auto pot = GaugePotentials::make(g, 1, GaugeFieldSpec::constant({0.1, -0.2}), 0.7,
                                         GaugeFieldSpec::gradient(wavy(2)));

  const auto [same, same_pot] = u1_transform(f, pot, U1Transform::identity(2));
  CHECK(same == f);
  CHECK(same_pot.xi == pot.xi);
  for (int axis = 0; axis < 2; ++axis) {
    CHECK(gauge_invariance_residual(f, pot, U1Transform::identity(2), axis) == 0.0);
    CHECK(gauge_invariance_residual(f, pot, U1Transform::identity(2), axis, DerivativeForm::exact_link) == 0.0);
  }

  const auto [phased, phased_pot] = u1_transform(f, pot, U1Transform::constant(2, 0.9));
  CHECK(phased_pot.xi == pot.xi);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(phased(i, 0) - std::polar(1.0, 0.9) * f(i, 0)) < 1e-15);

  const Point k{2.0 * kPi * 3.0 / 2.0, -2.0 * kPi / 2.0};
  const auto [lin, lin_pot] = u1_transform(f, pot, U1Transform::linear(k));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (int a = 0; a < 2; ++a) CHECK(lin_pot.xi(i, a) == pot.xi(i, a) - k[a] / pot.g1);
  }
  CHECK(lin_pot.scaling == pot.scaling);
  CHECK(lin_pot.omega == pot.omega);

  CHECK_THROWS_AS(u1_transform(f, GaugePotentials::make(g, 1, GaugeFieldSpec::zero(2), 0.0,
                                                        GaugeFieldSpec::zero(2)),
                               U1Transform::constant(2, 1.0)),
                  UsageError);
  CHECK_THROWS_AS(u1_transform(f, pot, U1Transform::identity(1)), UsageError);
}

TEST_CASE("exact-link form is gauge invariant on the lattice") {
  const auto specs = su2_specs(2);
  const Grid g = Grid::cube(2, -1.0, 1.0, 24);
  for (int comps : {1, 2}) {
    const auto f = random_field(g, comps, 40 + comps);
    const auto pot = GaugePotentials::make(g, comps, GaugeFieldSpec::gradient(wavy(2), 0.5), 0.8,
                                           GaugeFieldSpec::gradient(wavy(2)), comps == 2 ? 1.1 : 0.0,
                                           comps == 2 ? &specs : nullptr);
    for (const auto& t : {U1Transform::linear(Point{2.0 * kPi, -4.0 * kPi / 2.0}),
                          U1Transform::sine(2, 0.8, kPi)}) {
      for (int axis = 0; axis < 2; ++axis) {
        CHECK(gauge_invariance_residual(f, pot, t, axis, DerivativeForm::exact_link) <= 1e-12);
      }
    }
  }
}

TEST_CASE("first-order gauge residual vanishes like h") {
  std::vector<double> errs;
  const double len = 2.0;
  for (int n : {32, 64, 128, 256}) {
    const Grid g = Grid::cube(1, 0.0, len, n);
    const auto pot = GaugePotentials::make(g, 1, GaugeFieldSpec::constant({0.2}), 0.6,
                                           GaugeFieldSpec::gradient(wavy(1)));
    errs.push_back(gauge_invariance_residual(smooth_field(g, 1), pot, U1Transform::sine(1, 0.5, 2.0 * kPi / len), 0));
  }
  CHECK(errs.front() > 1e-3);
  CHECK(fit_order(std::vector<double>{1.0, 0.5, 0.25, 0.125}, errs) >= 0.9);
  for (double order : halving_orders(errs)) CHECK(order >= 0.9);
}
