#pragma once

#include <array>
#include <optional>

#include "roughcomb/quadrature.hpp"

namespace roughcomb {

// Support-point pair coordinates for the interval-on-a-line law:
// a1 in [-1, 0] (left support), a2 in [0, 1] (right support).
struct SupportPoint2 {
  double a1;
  double a2;
};

// Limit density of the support pair (a1, a2) on [-1,0]x[0,1].
double density_p(double a1, double a2);
inline double density_p(const SupportPoint2& a) { return density_p(a.a1, a.a2); }

// Marginal density of the right support point a2; the left marginal is its
// mirror image.
double marginal_right(double a2);

// Normalized loads carried by the two support teeth: (a2, -a1)/(a2 - a1).
std::array<double, 2> load_fractions(double a1, double a2);

// Rate at which the left support point at a1 is scratched, defined as the
// load-weighted marginal integral(0..1) a2/(a2-a1) * p(a1, a2) da2, computed
// by quadrature.  scratch_rate_right mirrors it.
double scratch_rate_left(double a1, QuadratureSpec spec = {1e-10, 1e-10, 50});
double scratch_rate_right(double a2, QuadratureSpec spec = {1e-10, 1e-10, 50});

// Alternative closed form 2/(3(1-a1)^3) + 1/2 for the left scratch rate.
// Its additive constant is inconsistent with the integral definition above
// (direct quadrature yields +1/4, not +1/2); the two are reported side by
// side by the verification suite and are deliberately NOT asserted equal.
double scratch_rate_left_alt_form(double a1);
double scratch_rate_right_alt_form(double a2);

// Probability that a walker at abscissa mu (by symmetry, -mu) never tips the
// interval: closed form of the integral of density_p over {-a1 > mu, a2 > mu}.
double p_star_beam(double mu);

// Splits density_p(a) into the three additive parts whose sum is exactly
// density_p: Q1 = (a2-a1)/2 and the two tail terms.
std::array<double, 3> q_decomposition(double a1, double a2);

// A fixed line over the comb, through the points (a1, 1 - A1/N) and
// (a2, 1 - A2/N) in the scaled tip-gap variables A1, A2 >= 0.  x_star is the
// abscissa where the line crosses height 1 (present only in the regime where
// it does so inside the segment).
struct LinePlacement {
  double A1;
  double A2;
  SupportPoint2 a;
  std::optional<double> x_star;

  LinePlacement(double A1_, double A2_, SupportPoint2 a_);
};

// Limit probability that every tooth of a uniform comb stays below the
// placed line.  Case (1), |A1-A2| < A1*a2 - A2*a1: the line stays under
// height 1 across the whole segment.  Case (2): it crosses height 1 at
// x_star and the exponent becomes quadratic.
double prob_comb_below_line(const LinePlacement& placement);

}  // namespace roughcomb
