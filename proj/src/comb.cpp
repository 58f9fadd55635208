#include "roughcomb/comb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "roughcomb/circle_law.hpp"

namespace roughcomb {

namespace {

void check_heights(const std::vector<double>& hts, std::size_t n) {
  if (hts.size() != n) throw std::invalid_argument("comb: heights/positions length mismatch");
  for (double h : hts) {
    if (!(h >= 0.0 && h <= 1.0)) throw std::invalid_argument("comb: height outside [0, 1]");
  }
}

}  // namespace

LineComb::LineComb(std::vector<double> pos, std::vector<double> hts)
    : positions(std::move(pos)), heights(std::move(hts)) {
  if (positions.size() < 2) throw std::invalid_argument("LineComb: need at least 2 teeth");
  check_heights(heights, positions.size());
  bool has_neg = false, has_pos = false;
  double prev = -2.0;
  for (double x : positions) {
    // The default midpoint grid keeps positions strictly inside (-1, 1) and
    // away from 0; the legacy grid variant is allowed to touch x = 0 and
    // x = 1, and the settling code reports support there as degenerate.
    if (!(x > -1.0 - 1e-15 && x <= 1.0)) throw std::invalid_argument("LineComb: position outside (-1, 1]");
    if (!(x > prev)) throw std::invalid_argument("LineComb: positions not strictly increasing");
    prev = x;
    has_neg = has_neg || x < 0.0;
    has_pos = has_pos || x > 0.0;
  }
  if (!has_neg || !has_pos)
    throw std::invalid_argument("LineComb: need teeth on both sides of x = 0");
}

CircularComb::CircularComb(std::vector<double> ang, std::vector<double> hts)
    : angles(std::move(ang)), heights(std::move(hts)) {
  if (angles.size() < 3) throw std::invalid_argument("CircularComb: need at least 3 teeth");
  check_heights(heights, angles.size());
  double prev = -1.0;
  for (double a : angles) {
    if (!(a >= 0.0 && a < kTwoPi)) throw std::invalid_argument("CircularComb: angle outside [0, 2pi)");
    if (!(a > prev)) throw std::invalid_argument("CircularComb: angles not strictly increasing");
    prev = a;
  }
}

LineComb sample_line_comb(int n_teeth, const HeightDistribution& dist, RngStream& rng,
                          LinePlacementMode mode) {
  if (n_teeth < 2) throw std::invalid_argument("sample_line_comb: n_teeth must be >= 2");
  std::vector<double> pos(static_cast<std::size_t>(n_teeth));
  double n = static_cast<double>(n_teeth);
  switch (mode) {
    case LinePlacementMode::MidpointGrid:
      for (int j = 1; j <= n_teeth; ++j) pos[j - 1] = -1.0 + (2.0 * j - 1.0) / n;
      break;
    case LinePlacementMode::PaperGrid:
      for (int j = 1; j <= n_teeth; ++j) pos[j - 1] = -1.0 + 2.0 * j / n;
      break;
    case LinePlacementMode::UniformRandom:
      for (auto& x : pos) x = -1.0 + 2.0 * rng.next_double();
      std::sort(pos.begin(), pos.end());
      break;
  }
  std::vector<double> hts(static_cast<std::size_t>(n_teeth));
  for (auto& h : hts) h = dist.sample(rng);
  return LineComb(std::move(pos), std::move(hts));
}

LineComb sample_line_comb(int n_teeth, const HeightDistribution& dist, std::uint64_t rng_seed,
                          LinePlacementMode mode) {
  RngStream rng(rng_seed);
  return sample_line_comb(n_teeth, dist, rng, mode);
}

CircularComb sample_circular_comb(int n_teeth, const HeightDistribution& dist, RngStream& rng) {
  if (n_teeth < 3) throw std::invalid_argument("sample_circular_comb: n_teeth must be >= 3");
  std::vector<double> ang(static_cast<std::size_t>(n_teeth));
  double n = static_cast<double>(n_teeth);
  // alpha_j = 2 pi j / n for j = 1..n; j = n wraps to angle 0, stored first.
  ang[0] = 0.0;
  for (int j = 1; j < n_teeth; ++j) ang[j] = kTwoPi * j / n;
  std::vector<double> hts(static_cast<std::size_t>(n_teeth));
  // Heights are drawn in grid order j = 1..n, matching the angle formula;
  // the height for the wrapped tooth j = n comes last.
  for (int j = 1; j < n_teeth; ++j) hts[j] = dist.sample(rng);
  hts[0] = dist.sample(rng);
  return CircularComb(std::move(ang), std::move(hts));
}

CircularComb sample_circular_comb(int n_teeth, const HeightDistribution& dist,
                                  std::uint64_t rng_seed) {
  RngStream rng(rng_seed);
  return sample_circular_comb(n_teeth, dist, rng);
}

}  // namespace roughcomb
