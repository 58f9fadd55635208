#pragma once

#include <cstdint>
#include <vector>

#include "roughcomb/rng.hpp"

namespace roughcomb {

// How line-comb tooth positions are laid out on [-1, 1].
//
// MidpointGrid (default): x_j = -1 + (2j-1)/N, j = 1..N.  No tooth sits at
// x = 0 for any N, so a single-tooth balance cannot occur by construction.
// PaperGrid: x_j = -1 + 2j/N, j = 1..N.  For even N this places a tooth at
// exactly x = 0 and one at x = 1; support through the center tooth is
// reported as degenerate by the settling code.
// UniformRandom: i.i.d. uniform positions on (-1, 1), sorted.
enum class LinePlacementMode { MidpointGrid, PaperGrid, UniformRandom };

// Teeth standing on the segment [-1, 1]: strictly increasing positions with
// i.i.d. heights in [0, 1].
struct LineComb {
  std::vector<double> positions;
  std::vector<double> heights;

  LineComb(std::vector<double> pos, std::vector<double> hts);

  int n() const { return static_cast<int>(positions.size()); }
};

// Teeth standing on the unit circle: strictly increasing angles in [0, 2*pi)
// with i.i.d. heights in [0, 1].
struct CircularComb {
  std::vector<double> angles;
  std::vector<double> heights;

  CircularComb(std::vector<double> ang, std::vector<double> hts);

  int n() const { return static_cast<int>(angles.size()); }
};

LineComb sample_line_comb(int n_teeth, const HeightDistribution& dist, std::uint64_t rng_seed,
                          LinePlacementMode mode = LinePlacementMode::MidpointGrid);

// Same comb laws but drawing from an existing stream (used by the trial loop).
LineComb sample_line_comb(int n_teeth, const HeightDistribution& dist, RngStream& rng,
                          LinePlacementMode mode = LinePlacementMode::MidpointGrid);

CircularComb sample_circular_comb(int n_teeth, const HeightDistribution& dist,
                                  std::uint64_t rng_seed);

CircularComb sample_circular_comb(int n_teeth, const HeightDistribution& dist, RngStream& rng);

}  // namespace roughcomb
