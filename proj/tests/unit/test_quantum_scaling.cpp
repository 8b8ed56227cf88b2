#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nscale/error.hpp"
#include "nscale/numeric.hpp"
#include "nscale/quantum_scaling.hpp"
#include "oracles.hpp"

using namespace nscale;

namespace {

ScalarPotential quadratic_potential(int dim) {
  ScalarPotential g = make_potential(dim);
  for (int i = 0; i < dim; ++i) {
    g.linear[i] = 0.02 * (i + 1);
    g.diagonal[i] = -0.01;
  }
  g.cross = 0.005;
  return g;
}

double max_rel_diff(const WavePacket& a, const WavePacket& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, relative_error(a[i], b[i], 1e-300));
  return worst;
}

}  // namespace

TEST_CASE("gaussian_packet shape, norm and centre") {
  const Grid g = Grid::cube(1, -10.0, 10.0, 256);
  const WavePacket psi = gaussian_packet(g, Point{1.3}, 1.0, Point{0.0});
  std::size_t peak = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    CHECK(psi[i].imag() == 0.0);
    CHECK(psi[i].real() > 0.0);
    if (std::abs(psi[i]) > std::abs(psi[peak])) peak = i;
  }
  CHECK(std::abs(g.point(peak)[0] - 1.3) <= g.h(0) / 2);
  CHECK(standard_norm(psi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(standard_expectation(psi)[0] - 1.3) < 1e-10);

  const Grid g3 = Grid::cube(3, -8.0, 8.0, 48);
  const WavePacket p3 = gaussian_packet(g3, Point{0.5, -1.0, 1.5}, 1.0, Point{0.3, 0.0, -0.2});  // coarse 3D lattice
  const Point mean = standard_expectation(p3);
  CHECK(std::abs(mean[0] - 0.5) < 1e-8);
  CHECK(std::abs(mean[1] + 1.0) < 1e-8);
  CHECK(std::abs(mean[2] - 1.5) < 1e-8);

  CHECK_THROWS_AS(gaussian_packet(g, Point{0.0}, 0.1, Point{0.0}), UsageError);
  CHECK_THROWS_AS(gaussian_packet(g, Point{11.0}, 1.0, Point{0.0}), UsageError);
  CHECK_THROWS_AS(gaussian_packet(g, Point{0.0, 0.0}, 1.0, Point{0.0, 0.0}), UsageError);
}

TEST_CASE("parallel_packet is the identity") {
  const Grid g = Grid::cube(2, -5.0, 5.0, 32);
  for (double k : {0.0, 0.7, -1.9}) {
    const WavePacket psi = gaussian_packet(g, Point{0.5 * k, -0.3}, 1.0, Point{k, 0.4});
    CHECK(parallel_packet(psi) == psi);
  }
}

TEST_CASE("scaled_packet with zero and constant fields") {
  const Grid g = Grid::cube(2, -6.0, 6.0, 48);
  const WavePacket psi = gaussian_packet(g, Point{0.5, -0.5}, 1.0, Point{0.8, 0.0});
  const Point x0{-6.0, -6.0};
  CHECK(scaled_packet(psi, GaugeFieldSpec::zero(2), x0) == psi);
  CHECK(scaled_packet(psi, GaugeFieldSpec::constant({0.3, -0.1}, 0.0), x0) == psi);

  const double alpha = 0.07;
  const WavePacket scaled = scaled_packet(psi, GaugeFieldSpec::constant({alpha, 0.0}), x0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double factor = std::exp(alpha * (g.point(i)[0] - x0[0]));
    CHECK(std::abs(scaled[i] - factor * psi[i]) <= 1e-13 * std::abs(factor * psi[i]) + 1e-300);
  }
}

TEST_CASE("scaled_packet first-order regime") {
  const Grid g = Grid::cube(1, 0.0, 10.0, 128);
  const WavePacket psi = gaussian_packet(g, Point{5.0}, 1.0, Point{0.0});
  const double alpha = 1e-5;  // alpha * L = 1e-4
  const auto spec = GaugeFieldSpec::constant({alpha});
  const Point x0{0.0};
  const WavePacket scaled = scaled_packet(psi, spec, x0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double first_order = 1.0 + alpha * (g.point(i)[0] - x0[0]);
    CHECK(std::abs(scaled[i] - first_order * psi[i]) <= 1e-8 * std::abs(psi[i]));
  }
}

TEST_CASE("scaled_packet refuses non-integrable fields") {
  const Grid g = Grid::cube(2, -4.0, 4.0, 32);
  const WavePacket psi = gaussian_packet(g, Point{0.0, 0.0}, 1.0, Point{0.0, 0.0});
  CHECK_THROWS_AS(scaled_packet(psi, GaugeFieldSpec::rotational(2, 0.05), Point{0.0, 0.0}),
                  IntegrabilityError);
  CHECK_THROWS_AS(position_expectation_scaled(psi, GaugeFieldSpec::rotational(2, 0.05), Point{0.0, 0.0},
                                              ExpectationMode::raw),
                  IntegrabilityError);
}

TEST_CASE("base-point covariance: scaled packets differ by one global factor") {
  const Grid g = Grid::cube(3, -4.0, 4.0, 24);
  const WavePacket psi = gaussian_packet(g, Point{0.2, 0.1, -0.3}, 1.0, Point{0.5, 0.0, 0.0});
  const Point x0{-4.0, -4.0, -4.0}, x1{3.0, -1.0, 2.5};
  for (const auto& field : {GaugeFieldSpec::constant({0.05, -0.02, 0.01}),
                            GaugeFieldSpec::gradient(quadratic_potential(3))}) {
    const WavePacket a = scaled_packet(psi, field, x0);
    const WavePacket b = scaled_packet(psi, field, x1);
    const double r_x1_x0 = straight_line_scale(field, x0, x1, Quadrature{}).value;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      CHECK(std::abs(b[i] * r_x1_x0 - a[i]) <= 1e-10 * std::abs(a[i]) + 1e-300);
    }
  }
}

TEST_CASE("volume_scaled_packet truncates and validates its anchor") {
  const Grid g = Grid::cube(2, -6.0, 6.0, 48);
  const WavePacket psi = gaussian_packet(g, Point{0.0, 0.0}, 0.8, Point{0.0, 0.0});
  const Box v = make_box(Point{-6.0, -6.0}, Point{6.0, 6.0});
  const Point outside{7.0, 7.0};
  const WavePacket whole = volume_scaled_packet(psi, GaugeFieldSpec::zero(2), v, v.lo, outside);
  CHECK(whole == psi);

  const Box inner = make_box(Point{-5.0, -5.0}, Point{5.0, 5.0});
  const WavePacket cut = volume_scaled_packet(psi, GaugeFieldSpec::zero(2), inner, Point{-5.0, 0.0}, outside);
  CHECK(std::abs(standard_norm(cut) - standard_norm(psi)) < 1e-6);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (!inner.contains(g.point(i))) CHECK(cut[i] == std::complex<double>(0.0, 0.0));
  }

  CHECK_THROWS_AS(volume_scaled_packet(psi, GaugeFieldSpec::zero(2), inner, Point{0.0, 0.0}, outside),
                  UsageError);
  CHECK_THROWS_AS(volume_scaled_packet(psi, GaugeFieldSpec::zero(2), inner, inner.lo, Point{0.0, 0.0}),
                  UsageError);
}

TEST_CASE("anchor relation between two surface points") {
  const Grid g = Grid::cube(3, -4.0, 4.0, 24);
  const WavePacket psi = gaussian_packet(g, Point{0.0, 0.5, -0.5}, 1.0, Point{0.3, 0.0, 0.0});
  const Box v = make_box(Point{-3.0, -3.0, -3.0}, Point{3.0, 3.0, 3.0});
  const auto c = GaugeFieldSpec::constant({0.05, 0.03, -0.02});
  CHECK(anchor_relation_check(psi, c, v, v.lo, v.lo) == 0.0);
  CHECK(anchor_relation_check(psi, GaugeFieldSpec::zero(3), v, v.lo, v.hi) == 0.0);
  CHECK(anchor_relation_check(psi, c, v, v.lo, v.hi) <= 1e-10);
  CHECK(anchor_relation_check(psi, GaugeFieldSpec::gradient(quadratic_potential(3)), v, v.lo,
                              Point{3.0, 0.0, 1.0}) <= 1e-10);
}

TEST_CASE("position expectations: standard, raw and normalized") {
  const Grid g = Grid::cube(1, -12.0, 12.0, 512);
  const double mu = 0.7, sigma = 1.1;
  const WavePacket psi = gaussian_packet(g, Point{mu}, sigma, Point{0.4});
  const Point x0{-12.0};

  const auto zero = position_expectation_scaled(psi, GaugeFieldSpec::zero(1), x0, ExpectationMode::normalized);
  CHECK(std::abs(zero.value[0] - mu) < 1e-10);

  const double alpha = 0.01;
  const auto field = GaugeFieldSpec::constant({alpha});
  const auto norm = position_expectation_scaled(psi, field, x0, ExpectationMode::normalized);
  const auto raw = position_expectation_scaled(psi, field, x0, ExpectationMode::raw);
  const double oracle_mean = oracle::tilted_mean_1d(alpha, x0[0], mu, sigma, -12.0, 12.0, 4 * 512);
  CHECK(std::abs(norm.value[0] - oracle_mean) < 1e-9);
  // A single factor of r tilts |psi|^2 by exp(alpha y): the mean moves by alpha sigma^2.
  CHECK(std::abs((norm.value[0] - mu) - alpha * sigma * sigma) < 1e-9);
  CHECK(raw.value[0] == doctest::Approx(norm.value[0] * raw.scaled_norm).epsilon(1e-14));
  CHECK(raw.scaled_norm == norm.scaled_norm);

  const WavePacket empty(g, Amplitudes(g.size()));
  CHECK_THROWS_AS(position_expectation_scaled(empty, field, x0, ExpectationMode::raw), UsageError);
}

TEST_CASE("zero coupling reproduces the unscaled expectation bit for bit") {
  const Grid g = Grid::cube(2, -6.0, 6.0, 64);
  const WavePacket psi = gaussian_packet(g, Point{0.3, -0.8}, 1.0, Point{1.0, -0.5});
  const auto off = GaugeFieldSpec::gradient(quadratic_potential(2), 0.0);
  const Point std_mean = standard_expectation(psi);
  const auto scaled = position_expectation_scaled(psi, off, Point{-6.0, -6.0}, ExpectationMode::normalized);
  CHECK(scaled.value == std_mean);
  CHECK(scaled.scaled_norm == standard_norm(psi));
  CHECK(scaled_packet(psi, off, Point{1.0, 1.0}) == psi);
}
