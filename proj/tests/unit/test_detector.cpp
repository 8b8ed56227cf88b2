#include <doctest.h>

#include <cmath>
#include <vector>

#include "nscale/detector.hpp"
#include "nscale/error.hpp"
#include "nscale/numeric.hpp"

using namespace nscale;

TEST_CASE("partition geometry") {
  const Grid g = Grid::cube(2, -4.0, 4.0, 32);
  const auto p = DetectorPartition::make(g, 2.0);
  CHECK(p.cube_count() == 16u);
  CHECK(p.cells_per_cube(0) == 8);
  CHECK(p.cube_of(0) == 0u);
  CHECK(p.anchor(0) == Point{-4.0, -4.0});
  CHECK(p.anchor(5) == Point{-2.0, -2.0});
  const auto f = DetectorPartition::make(g, 2.0, AnchorRule::face_center);
  CHECK(f.anchor(5) == Point{-2.0, -1.0});
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(p.cube_box(p.cube_of(i)).contains(g.point(i)));

  CHECK_THROWS_AS(DetectorPartition::make(g, 3.0), UsageError);   // 8 / 3 is not whole
  CHECK_THROWS_AS(DetectorPartition::make(g, 8.0 / 3.0 * 0.5), UsageError);
  CHECK_THROWS_AS(DetectorPartition::make(g, 0.125), UsageError);  // finer than a cell
  CHECK_THROWS_AS(DetectorPartition::make(g, -1.0), UsageError);
  CHECK(to_string(anchor_rule_from_string("face-center")) == "face-center");
  CHECK_THROWS_AS(anchor_rule_from_string("middle"), UsageError);
}

TEST_CASE("detector packet: zero field, single cube and coherence") {
  const Grid g = Grid::cube(2, -5.0, 5.0, 40);
  const WavePacket psi = gaussian_packet(g, Point{0.4, -0.3}, 1.0, Point{0.9, -0.4});
  const Point x0{6.0, 6.0};
  const auto fine = DetectorPartition::make(g, 1.25);
  CHECK(detector_packet(psi, GaugeFieldSpec::zero(2), fine, x0) == psi);

  const auto field = GaugeFieldSpec::constant({0.05, -0.03});
  const auto whole = DetectorPartition::make(g, 10.0);
  CHECK(detector_packet(psi, field, whole, x0) ==
        volume_scaled_packet(psi, field, g.box(), g.box().lo, x0));

  const WavePacket d = detector_packet(psi, field, fine, x0);
  CHECK(standard_norm(d) > 0.0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (std::abs(psi[i]) < 1e-200) continue;
    const auto ratio = d[i] / psi[i];
    CHECK(ratio.real() > 0.0);
    CHECK(std::abs(ratio.imag()) <= 1e-15 * ratio.real());
  }

  const Grid other = Grid::cube(2, -5.0, 5.0, 20);
  CHECK_THROWS_AS(detector_packet(psi, field, DetectorPartition::make(other, 2.5), x0), UsageError);
}

TEST_CASE("in-cube factors obey the exponential bound") {
  const Grid g = Grid::cube(3, -4.0, 4.0, 32);
  const auto field = GaugeFieldSpec::constant({0.3, -0.2, 0.1}, 0.5);
  const double a_max = field.max_norm_on(g.box());
  for (double delta : {4.0, 2.0, 1.0, 0.5}) {
    const auto p = DetectorPartition::make(g, delta);
    const double bound = std::exp(a_max * std::sqrt(3.0) * delta) - 1.0;
    const double dev = max_in_cube_deviation(field, p);
    CHECK(dev > 0.0);
    CHECK(dev <= bound);
  }
}

TEST_CASE("detector expectation: zero field, whole-volume degeneracy, and Delta trend") {
  const Grid g = Grid::cube(1, -16.0, 16.0, 1024);
  const WavePacket psi = gaussian_packet(g, Point{2.5}, 1.5, Point{0.0});
  const Point standard = standard_expectation(psi);

  CHECK(detector_expectation(psi, GaugeFieldSpec::zero(1), DetectorPartition::make(g, 1.0),
                             ExpectationMode::raw)
            .value[0] == doctest::Approx(standard[0]).epsilon(1e-15));

  const auto field = GaugeFieldSpec::constant({0.05});
  const auto whole = detector_expectation(psi, field, DetectorPartition::make(g, 32.0), ExpectationMode::raw);
  const auto anchored = position_expectation_scaled(psi, field, g.box().lo, ExpectationMode::raw);
  CHECK(std::abs(whole.value[0] - anchored.value[0]) <= 1e-12 * std::abs(anchored.value[0]));

  std::vector<double> deltas, errors;
  for (int div : {8, 16, 32, 64, 128}) {
    const double delta = 32.0 / div;
    const auto e = detector_expectation(psi, field, DetectorPartition::make(g, delta), ExpectationMode::raw);
    deltas.push_back(delta);
    errors.push_back(std::abs(e.value[0] - standard[0]));
  }
  for (std::size_t i = 1; i < errors.size(); ++i) CHECK(errors[i] < errors[i - 1]);
  CHECK(fit_order(deltas, errors) >= 0.9);
}

TEST_CASE("normalized detector expectation divides by the in-cube scaled norm") {
  const Grid g = Grid::cube(2, -6.0, 6.0, 48);
  const WavePacket psi = gaussian_packet(g, Point{1.0, -0.5}, 1.0, Point{0.0, 0.0});
  const auto field = GaugeFieldSpec::constant({0.1, 0.05});
  const auto p = DetectorPartition::make(g, 3.0, AnchorRule::face_center);
  const auto raw = detector_expectation(psi, field, p, ExpectationMode::raw);
  const auto norm = detector_expectation(psi, field, p, ExpectationMode::normalized);
  for (int a = 0; a < 2; ++a) {
    CHECK(norm.value[a] == doctest::Approx(raw.value[a] / raw.scaled_norm).epsilon(1e-15));
  }
  CHECK_THROWS_AS(detector_expectation(psi, GaugeFieldSpec::rotational(2, 0.1), p, ExpectationMode::raw),
                  IntegrabilityError);
}
