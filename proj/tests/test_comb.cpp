#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "roughcomb/circle_law.hpp"
#include "roughcomb/comb.hpp"

using namespace roughcomb;

TEST_CASE("midpoint grid positions") {
  LineComb two = sample_line_comb(2, HeightDistribution::uniform01(), 11u);
  REQUIRE(two.n() == 2);
  CHECK(two.positions[0] == -0.5);
  CHECK(two.positions[1] == 0.5);

  LineComb four = sample_line_comb(4, HeightDistribution::uniform01(), 11u);
  CHECK(four.positions[0] == -0.75);
  CHECK(four.positions[1] == -0.25);
  CHECK(four.positions[2] == 0.25);
  CHECK(four.positions[3] == 0.75);
}

TEST_CASE("endpoint grid positions include x = 1 and, for even n, x = 0") {
  LineComb four =
      sample_line_comb(4, HeightDistribution::uniform01(), 11u, LinePlacementMode::PaperGrid);
  CHECK(four.positions[0] == -0.5);
  CHECK(four.positions[1] == 0.0);
  CHECK(four.positions[2] == 0.5);
  CHECK(four.positions[3] == 1.0);
  // n = 2 puts both teeth at x >= 0, which violates the comb contract
  CHECK_THROWS_AS(
      sample_line_comb(2, HeightDistribution::uniform01(), 11u, LinePlacementMode::PaperGrid),
      std::invalid_argument);
}

TEST_CASE("random placement is sorted, interior, and two-sided") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    LineComb comb = sample_line_comb(12, HeightDistribution::uniform01(), seed,
                                     LinePlacementMode::UniformRandom);
    bool has_left = false, has_right = false;
    for (int i = 0; i < comb.n(); ++i) {
      REQUIRE(comb.positions[i] > -1.0);
      REQUIRE(comb.positions[i] < 1.0);
      if (i > 0) REQUIRE(comb.positions[i] > comb.positions[i - 1]);
      has_left = has_left || comb.positions[i] < 0.0;
      has_right = has_right || comb.positions[i] > 0.0;
    }
    CHECK(has_left);
    CHECK(has_right);
  }
}

TEST_CASE("circular grid angles") {
  CircularComb three = sample_circular_comb(3, HeightDistribution::uniform01(), 5u);
  REQUIRE(three.n() == 3);
  CHECK(three.angles[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(three.angles[1] == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(three.angles[2] == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));

  CircularComb four = sample_circular_comb(4, HeightDistribution::uniform01(), 5u);
  CHECK(four.angles[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(four.angles[1] == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(four.angles[2] == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(four.angles[3] == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-15));
}

TEST_CASE("heights are i.i.d. in [0, 1] with the configured law") {
  LineComb comb = sample_line_comb(1000, HeightDistribution::uniform01(), 42u);
  double sum = 0.0;
  for (double h : comb.heights) {
    REQUIRE(h >= 0.0);
    REQUIRE(h <= 1.0);
    sum += h;
  }
  CHECK(std::abs(sum / 1000 - 0.5) < 0.05);

  CircularComb circle = sample_circular_comb(500, HeightDistribution::uniform01(), 7u);
  REQUIRE(circle.n() == 500);
  for (double h : circle.heights) {
    REQUIRE(h >= 0.0);
    REQUIRE(h <= 1.0);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  LineComb a = sample_line_comb(64, HeightDistribution::beta_ab(2.0, 2.0), 99u);
  LineComb b = sample_line_comb(64, HeightDistribution::beta_ab(2.0, 2.0), 99u);
  CHECK(a.positions == b.positions);
  CHECK(a.heights == b.heights);
  LineComb c = sample_line_comb(64, HeightDistribution::beta_ab(2.0, 2.0), 100u);
  CHECK(a.heights != c.heights);

  CircularComb d = sample_circular_comb(64, HeightDistribution::triangular(0.3), 99u);
  CircularComb e = sample_circular_comb(64, HeightDistribution::triangular(0.3), 99u);
  CHECK(d.heights == e.heights);
}

TEST_CASE("tooth-count preconditions") {
  CHECK_THROWS_AS(sample_line_comb(1, HeightDistribution::uniform01(), 1u),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_circular_comb(2, HeightDistribution::uniform01(), 1u),
                  std::invalid_argument);
}

TEST_CASE("comb constructors reject malformed data") {
  CHECK_THROWS_AS(LineComb({-0.5, 0.5}, {0.1}), std::invalid_argument);
  CHECK_THROWS_AS(LineComb({0.5, -0.5}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(LineComb({0.25, 0.5}, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(CircularComb({0.0, 1.0}, {0.1, 0.2, 0.3}), std::invalid_argument);
  CHECK_THROWS_AS(CircularComb({0.0, 2.0, 1.0}, {0.1, 0.2, 0.3}), std::invalid_argument);
}
