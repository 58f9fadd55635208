#pragma once

#include <array>

#include "roughcomb/quadrature.hpp"

namespace roughcomb {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Gap-angle triple of a support triangle on the unit circle: each gap in
// (0, pi), gaps summing to 2*pi.  theta[i] is the arc opposite vertex i,
// i.e. theta[i] = phi[i+2] - phi[i+1] (cyclic, mod 2*pi).
struct ThetaTriple {
  std::array<double, 3> theta;

  explicit ThetaTriple(std::array<double, 3> t);
  ThetaTriple(double t1, double t2, double t3) : ThetaTriple(std::array<double, 3>{t1, t2, t3}) {}

  double operator[](int i) const { return theta[static_cast<std::size_t>(i)]; }
};

// Vertex angles of a support triangle in positive cyclic order on [0, 2*pi).
struct PhiTriple {
  std::array<double, 3> phi;

  explicit PhiTriple(std::array<double, 3> p);
  PhiTriple(double p1, double p2, double p3) : PhiTriple(std::array<double, 3>{p1, p2, p3}) {}

  double operator[](int i) const { return phi[static_cast<std::size_t>(i)]; }
};

// Gap triple of a vertex triple; throws std::domain_error if some gap falls
// outside (0, pi) (no equilibrium with the center inside the triangle).
ThetaTriple theta_from_phi(const PhiTriple& phi);

// Lexicographically smallest cyclic rotation: a concrete fundamental-domain
// representative for triples identified up to cyclic relabeling.
ThetaTriple canonicalize(const ThetaTriple& theta);

// Kernel f(xi) = integral(0..xi/2) (xi - 2u) sin u / ((pi-u) cos u + sin u)^3 du
// for xi in [0, pi], by adaptive quadrature.
double f_kernel(double xi, QuadratureSpec spec = {1e-10, 1e-10, 50});

// Shared dense-grid memo of f_kernel with local cubic interpolation; built
// once on first use, then read-only.  Checked against f_kernel to 1e-8.
double f_kernel_memo(double xi);

// Limit density of the gap triple with respect to d(theta1) d(theta2) on the
// full triangle {0 < theta_i < pi}; invariant under cyclic rotations of the
// argument (bitwise: inputs are sorted before evaluation).  Total mass over
// the full triangle is 3 (three cyclic copies of the quotient).
double density_pT(const ThetaTriple& theta);

// Same value from direct quadrature of the kernel, bypassing the memo.
double density_pT_direct(const ThetaTriple& theta);

// A fixed plane over the circular comb, z = 1 - (sigma0 + sigma_x x +
// sigma_y y)/N, determined by tip gaps A at vertex angles phi.
struct PlanePlacement {
  double sigma0;
  double sigma_x;
  double sigma_y;
  double Delta;  // sin(theta1) + sin(theta2) + sin(theta3) > 0
  std::array<double, 3> A;
  PhiTriple phi;

  // w accessor of the ratio sqrt(sigma_x^2+sigma_y^2)/sigma0 (sigma0 > 0).
  double w() const;
};

// Solves the 3x3 system for the plane through the three tips (Cramer).
// Throws on a degenerate (near-zero Delta) triangle.
PlanePlacement plane_coeffs(const PhiTriple& phi, const std::array<double, 3>& A);

// Overlap factor governing the case-2 comb-below-plane probability:
// (1/pi) (phi_sigma - tan(phi_sigma)), phi_sigma = arccos(-sigma0/sigma*),
// defined for sigma* = hypot(sigma_x, sigma_y) >= sigma0 > 0.
double script_A(const PlanePlacement& placement);

// Quadrature of the defining integral of script_A over the arc where the
// plane-gap function is positive; independent check of the closed form.
double script_A_quadrature(const PlanePlacement& placement,
                           QuadratureSpec spec = {1e-12, 1e-12, 60});

// Limit probability that every tooth of a uniform circular comb stays below
// the placed plane: exp(-sigma0) when sigma*^2 < sigma0^2, else
// exp(-sigma0 * script_A).
double prob_comb_below_plane(const PlanePlacement& placement);

// Residuals of the three half-angle cotangent identities satisfied by any
// gap triple (c_i = cot(theta_i / 2)):
//   c1 c2 + c2 c3 + c3 c1 = 1
//   (sum sin theta_i) / (prod sin(theta_i / 2)) = 4
//   1 / prod sin(theta_i / 2) = c1 + c2 + c3 - c1 c2 c3
std::array<double, 3> cot_identity_residuals(const ThetaTriple& theta);

// Probability that a walker of mass ratio mu circling the hoop never tips
// it: 0 for mu >= 1/2, else the double integral of density_pT / 3 over the
// gap region {theta_i < 2*arccos(mu)}.
double p_star_hoop(double mu, QuadratureSpec spec = {1e-8, 1e-8, 40});

}  // namespace roughcomb
