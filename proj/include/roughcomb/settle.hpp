#pragma once

#include <array>

#include "roughcomb/comb.hpp"
#include "roughcomb/errors.hpp"

namespace roughcomb {

// The two teeth carrying a rigid interval laid on a line comb.
struct SupportPair {
  int left_index = -1;
  int right_index = -1;
  double a1 = 0.0;  // position of the left support, in (-1, 0)
  double a2 = 0.0;  // position of the right support, in (0, 1)
};

// The three teeth carrying a rigid hoop laid on a circular comb.
// Indices and angles are in increasing-angle (positive cyclic) order.
struct SupportTriple {
  std::array<int, 3> indices{-1, -1, -1};
  std::array<double, 3> phi{0.0, 0.0, 0.0};
};

// Where the center point sits relative to a triangle, with tolerance
// kGeomTol on the edge predicates.
enum class OriginLocation { Strict, OnEdge, Outside };

OriginLocation origin_in_triangle(double x1, double y1, double x2, double y2, double x3,
                                  double y3);

// Unique chord through two tips (one on each side of x = 0) that lies at or
// above every tip.  Upper convex hull by monotone chain; the hull edge whose
// x-span contains 0 is the answer.  Ties (tip exactly on the support chord,
// support exactly at x = 0) throw degenerate_error.
SupportPair support_pair(const LineComb& comb);

// Exhaustive scan over all left-right pairs; test oracle.
SupportPair brute_force_support_pair(const LineComb& comb, int cap = 200);

// Unique tip-plane that dominates all tips with the center strictly inside
// the projected support triangle.  Plane pivoting: tilt through the highest
// tip, then rotate about contact chords, descending over the center, until
// containment holds.  Exact ties (center on a chord, four coplanar contact
// tips, pivot-cap hit) throw degenerate_error.
SupportTriple support_triple(const CircularComb& comb);

// Exhaustive scan over all triples; test oracle.
SupportTriple brute_force_support_triple(const CircularComb& comb, int cap = 60);

}  // namespace roughcomb
