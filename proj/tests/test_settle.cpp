#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "roughcomb/circle_law.hpp"
#include "roughcomb/comb.hpp"
#include "roughcomb/errors.hpp"
#include "roughcomb/rng.hpp"
#include "roughcomb/settle.hpp"

using namespace roughcomb;

namespace {

double chord_at(const LineComb& comb, const SupportPair& sp, double x) {
  double h1 = comb.heights[sp.left_index], h2 = comb.heights[sp.right_index];
  return h1 + (h2 - h1) * (x - sp.a1) / (sp.a2 - sp.a1);
}

}  // namespace

TEST_CASE("four-tooth example settles on the documented pair") {
  LineComb comb({-0.75, -0.25, 0.25, 0.75}, {0.2, 0.9, 0.1, 0.8});
  SupportPair sp = support_pair(comb);
  CHECK(sp.left_index == 1);
  CHECK(sp.right_index == 3);
  CHECK(sp.a1 == -0.25);
  CHECK(sp.a2 == 0.75);
  SupportPair bp = brute_force_support_pair(comb);
  CHECK(bp.left_index == sp.left_index);
  CHECK(bp.right_index == sp.right_index);
}

TEST_CASE("two teeth leave only one admissible pair") {
  LineComb comb({-0.5, 0.5}, {0.03, 0.97});
  SupportPair sp = support_pair(comb);
  CHECK(sp.left_index == 0);
  CHECK(sp.right_index == 1);
}

TEST_CASE("support chord dominates every tip and spans x = 0") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    LineComb comb = sample_line_comb(20, HeightDistribution::uniform01(), seed);
    SupportPair sp = support_pair(comb);
    CHECK(sp.a1 < 0.0);
    CHECK(sp.a2 > 0.0);
    for (int i = 0; i < comb.n(); ++i)
      CHECK(chord_at(comb, sp, comb.positions[i]) >= comb.heights[i] - 1e-9);
  }
}

TEST_CASE("collinear tips are reported as degenerate by both implementations") {
  // heights linear in position: every chord through two tips contains the rest
  LineComb comb({-0.75, -0.25, 0.25, 0.75}, {0.8, 0.6, 0.4, 0.2});
  CHECK_THROWS_AS(support_pair(comb), degenerate_error);
  CHECK_THROWS_AS(brute_force_support_pair(comb), degenerate_error);
}

TEST_CASE("support exactly at x = 0 is degenerate") {
  LineComb comb({-0.5, 0.0, 0.5}, {0.1, 0.9, 0.1});
  CHECK_THROWS_AS(support_pair(comb), degenerate_error);
  CHECK_THROWS_AS(brute_force_support_pair(comb), degenerate_error);
}

TEST_CASE("pair oracle refuses combs beyond its cap") {
  RngStream rng(5);
  LineComb comb = sample_line_comb(201, HeightDistribution::uniform01(), rng);
  CHECK_THROWS_AS(brute_force_support_pair(comb), std::invalid_argument);
  CHECK_NOTHROW(support_pair(comb));
}

TEST_CASE("three teeth leave only one admissible triple") {
  CircularComb comb = sample_circular_comb(3, HeightDistribution::uniform01(), 17u);
  SupportTriple st = support_triple(comb);
  CHECK(st.indices == std::array<int, 3>{0, 1, 2});
  SupportTriple bt = brute_force_support_triple(comb);
  CHECK(bt.indices == st.indices);
}

TEST_CASE("four-tooth cross example: both implementations agree it is degenerate") {
  // antipodal equal-height pair puts the center exactly on a support chord
  CircularComb comb({0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0}, {0.9, 0.5, 0.5, 0.1});
  CHECK_THROWS_AS(support_triple(comb), degenerate_error);
  CHECK_THROWS_AS(brute_force_support_triple(comb), degenerate_error);
}

TEST_CASE("all-equal heights are degenerate (coplanar tips)") {
  CircularComb comb({0.0, 1.0, 2.0, 3.0, 4.0}, {0.5, 0.5, 0.5, 0.5, 0.5});
  CHECK_THROWS_AS(support_triple(comb), degenerate_error);
  CHECK_THROWS_AS(brute_force_support_triple(comb), degenerate_error);
}

TEST_CASE("support plane dominates every tip and the gaps are admissible") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CircularComb comb = sample_circular_comb(15, HeightDistribution::uniform01(), seed);
    SupportTriple st;
    try {
      st = support_triple(comb);
    } catch (const degenerate_error&) {
      continue;
    }
    ++checked;
    REQUIRE(st.indices[0] < st.indices[1]);
    REQUIRE(st.indices[1] < st.indices[2]);

    // gap angles strictly inside (0, pi) is the origin-containment condition
    ThetaTriple theta = theta_from_phi(PhiTriple(st.phi[0], st.phi[1], st.phi[2]));
    for (int i = 0; i < 3; ++i) {
      CHECK(theta[i] > 0.0);
      CHECK(theta[i] < kPi);
    }

    // plane through the three support tips stays above all tips
    double x[3], y[3], z[3];
    for (int i = 0; i < 3; ++i) {
      x[i] = std::cos(st.phi[i]);
      y[i] = std::sin(st.phi[i]);
      z[i] = comb.heights[st.indices[i]];
    }
    double det = (x[1] - x[0]) * (y[2] - y[0]) - (x[2] - x[0]) * (y[1] - y[0]);
    REQUIRE(std::abs(det) > 1e-12);
    double cx = ((z[1] - z[0]) * (y[2] - y[0]) - (z[2] - z[0]) * (y[1] - y[0])) / det;
    double cy = ((x[1] - x[0]) * (z[2] - z[0]) - (x[2] - x[0]) * (z[1] - z[0])) / det;
    double c0 = z[0] - cx * x[0] - cy * y[0];
    for (int i = 0; i < comb.n(); ++i) {
      double px = std::cos(comb.angles[i]), py = std::sin(comb.angles[i]);
      CHECK(c0 + cx * px + cy * py >= comb.heights[i] - 1e-9);
    }
  }
  CHECK(checked > 250);
}

TEST_CASE("triple oracle refuses combs beyond its cap") {
  RngStream rng(6);
  CircularComb comb = sample_circular_comb(61, HeightDistribution::uniform01(), rng);
  CHECK_THROWS_AS(brute_force_support_triple(comb), std::invalid_argument);
  CHECK_NOTHROW(support_triple(comb));
}

TEST_CASE("settling matches the exhaustive oracle on random combs") {
  RngStream meta(2718);
  int line_degenerate = 0;
  for (int i = 0; i < 2500; ++i) {
    int n = 2 + static_cast<int>(meta.next_u64() % 29);
    RngStream rng = trial_stream(2718, static_cast<std::uint64_t>(i));
    LineComb comb = sample_line_comb(n, HeightDistribution::uniform01(), rng);
    bool s_ok = true, b_ok = true;
    SupportPair sp{}, bp{};
    try {
      sp = support_pair(comb);
    } catch (const degenerate_error&) {
      s_ok = false;
    }
    try {
      bp = brute_force_support_pair(comb);
    } catch (const degenerate_error&) {
      b_ok = false;
    }
    REQUIRE(s_ok == b_ok);
    if (s_ok) {
      REQUIRE(sp.left_index == bp.left_index);
      REQUIRE(sp.right_index == bp.right_index);
    } else {
      ++line_degenerate;
    }
  }
  // odd midpoint grids place a tooth exactly at x = 0, and a support landing
  // on it counts as degenerate; at n = 3 that happens about half the time, so
  // small random sizes produce a solid but minority share of degenerates
  CHECK(line_degenerate > 0);
  CHECK(line_degenerate < 500);

  int circle_degenerate = 0;
  for (int i = 0; i < 2500; ++i) {
    int n = 3 + static_cast<int>(meta.next_u64() % 28);
    RngStream rng = trial_stream(2719, static_cast<std::uint64_t>(i));
    CircularComb comb = sample_circular_comb(n, HeightDistribution::uniform01(), rng);
    bool s_ok = true, b_ok = true;
    SupportTriple st{}, bt{};
    try {
      st = support_triple(comb);
    } catch (const degenerate_error&) {
      s_ok = false;
    }
    try {
      bt = brute_force_support_triple(comb);
    } catch (const degenerate_error&) {
      b_ok = false;
    }
    REQUIRE(s_ok == b_ok);
    if (s_ok) {
      REQUIRE(st.indices == bt.indices);
    } else {
      ++circle_degenerate;
    }
  }
  // even tooth counts admit antipodal center-chords, so some rate is expected
  CHECK(circle_degenerate > 0);
  CHECK(circle_degenerate < 1250);
}

TEST_CASE("origin location predicate distinguishes the three cases") {
  CHECK(origin_in_triangle(1.0, 0.0, -0.5, 0.8, -0.5, -0.8) == OriginLocation::Strict);
  CHECK(origin_in_triangle(1.0, 0.1, 0.2, 0.8, 0.5, -0.8) == OriginLocation::Outside);
  // origin exactly on the segment joining (1, 0) and (-1, 0)
  CHECK(origin_in_triangle(1.0, 0.0, -1.0, 0.0, 0.0, 1.0) == OriginLocation::OnEdge);
}
