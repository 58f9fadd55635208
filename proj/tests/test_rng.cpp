#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "roughcomb/rng.hpp"

using namespace roughcomb;

TEST_CASE("streams with the same seed produce the same sequence") {
  RngStream a(12345), b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("nearby seeds decorrelate") {
  RngStream a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i) equal += a.next_u64() == b.next_u64();
  CHECK(equal == 0);
}

TEST_CASE("trial streams differ by trial index and are reproducible") {
  RngStream s0 = trial_stream(42, 0);
  RngStream s1 = trial_stream(42, 1);
  RngStream s0_again = trial_stream(42, 0);
  std::uint64_t a = s0.next_u64();
  CHECK(a != s1.next_u64());
  CHECK(a == s0_again.next_u64());
}

TEST_CASE("uniform doubles live in [0, 1) with mean near one half") {
  RngStream rng(7);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    double u = rng.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / 100000 - 0.5) < 0.01);
}

TEST_CASE("positive uniform lives in (0, 1]") {
  RngStream rng(8);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.next_double_pos();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("height distributions sample inside [0, 1] with the right means") {
  auto mean_of = [](const HeightDistribution& d, std::uint64_t seed) {
    RngStream rng(seed);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
      double x = d.sample(rng);
      REQUIRE(x >= 0.0);
      REQUIRE(x <= 1.0);
      sum += x;
    }
    return sum / 100000;
  };
  CHECK(std::abs(mean_of(HeightDistribution::uniform01(), 1) - 0.5) < 0.01);
  CHECK(std::abs(mean_of(HeightDistribution::beta_ab(2.0, 2.0), 2) - 0.5) < 0.01);
  // Beta(a, b) mean is a / (a + b)
  CHECK(std::abs(mean_of(HeightDistribution::beta_ab(0.5, 1.5), 3) - 0.25) < 0.01);
  // triangular(0, m, 1) mean is (1 + m) / 3
  CHECK(std::abs(mean_of(HeightDistribution::triangular(0.3), 4) - 1.3 / 3.0) < 0.01);
}

TEST_CASE("distribution factories validate their parameters") {
  CHECK_THROWS_AS(HeightDistribution::beta_ab(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(HeightDistribution::beta_ab(1.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(HeightDistribution::triangular(1.5), std::invalid_argument);
  CHECK_THROWS_AS(HeightDistribution::triangular(-0.1), std::invalid_argument);
}
