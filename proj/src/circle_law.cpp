#include "roughcomb/circle_law.hpp"

#include "roughcomb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace roughcomb {

namespace {

double wrap_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

}  // namespace

ThetaTriple::ThetaTriple(std::array<double, 3> t) : theta(t) {
  for (double v : theta)
    if (!(v > 0.0) || !(v < kPi))
      throw std::invalid_argument("ThetaTriple: each gap must lie strictly in (0, pi)");
  double sum = theta[0] + theta[1] + theta[2];
  if (std::abs(sum - kTwoPi) > 1e-12)
    throw std::invalid_argument("ThetaTriple: gaps must sum to 2*pi");
}

PhiTriple::PhiTriple(std::array<double, 3> p) : phi(p) {
  for (double v : phi)
    if (!(v >= 0.0) || !(v < kTwoPi))
      throw std::invalid_argument("PhiTriple: angles must lie in [0, 2*pi)");
  double g1 = wrap_2pi(phi[1] - phi[0]);
  double g2 = wrap_2pi(phi[2] - phi[1]);
  double g3 = wrap_2pi(phi[0] - phi[2]);
  if (g1 <= 0.0 || g2 <= 0.0 || g3 <= 0.0 || g1 + g2 + g3 > 3.0 * kPi)
    throw std::invalid_argument("PhiTriple: angles must be distinct and positively oriented");
}

ThetaTriple theta_from_phi(const PhiTriple& phi) {
  // gap i is the arc opposite vertex i
  std::array<double, 3> t{wrap_2pi(phi[2] - phi[1]), wrap_2pi(phi[0] - phi[2]),
                          wrap_2pi(phi[1] - phi[0])};
  for (double v : t)
    if (!(v > 0.0) || !(v < kPi))
      throw std::domain_error("theta_from_phi: a gap falls outside (0, pi); no equilibrium");
  return ThetaTriple(t);
}

ThetaTriple canonicalize(const ThetaTriple& theta) {
  std::array<double, 3> best = theta.theta;
  for (int r = 1; r < 3; ++r) {
    std::array<double, 3> rot{theta[r % 3], theta[(r + 1) % 3], theta[(r + 2) % 3]};
    if (rot < best) best = rot;
  }
  return ThetaTriple(best);
}

double f_kernel(double xi, QuadratureSpec spec) {
  if (!(xi >= 0.0) || !(xi <= kPi)) throw std::invalid_argument("f_kernel: xi must lie in [0, pi]");
  if (xi == 0.0) return 0.0;
  auto integrand = [xi](double u) {
    double d = (kPi - u) * std::cos(u) + std::sin(u);
    return (xi - 2.0 * u) * std::sin(u) / (d * d * d);
  };
  return integrate_1d(integrand, 0.0, 0.5 * xi, spec);
}

namespace {

constexpr int kMemoIntervals = 1024;

const std::vector<double>& f_memo_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kMemoIntervals + 1);
    for (int i = 0; i <= kMemoIntervals; ++i) t[i] = f_kernel(kPi * i / kMemoIntervals);
    return t;
  }();
  return table;
}

}  // namespace

double f_kernel_memo(double xi) {
  if (!(xi >= 0.0) || !(xi <= kPi))
    throw std::invalid_argument("f_kernel_memo: xi must lie in [0, pi]");
  const std::vector<double>& tab = f_memo_table();
  double h = kPi / kMemoIntervals;
  int j = static_cast<int>(xi / h);
  int i0 = std::clamp(j - 1, 0, kMemoIntervals - 3);
  // 4-point Lagrange interpolation on nodes i0 .. i0+3
  double value = 0.0;
  for (int k = 0; k < 4; ++k) {
    double term = tab[i0 + k];
    for (int m = 0; m < 4; ++m) {
      if (m == k) continue;
      term *= (xi - (i0 + m) * h) / ((k - m) * h);
    }
    value += term;
  }
  return value;
}

namespace {

double pT_from(const std::array<double, 3>& theta, double f1, double f2, double f3) {
  double prod =
      std::sin(0.5 * theta[0]) * std::sin(0.5 * theta[1]) * std::sin(0.5 * theta[2]);
  return kTwoPi * prod * (1.0 / (kPi * kPi) + f1 + f2 + f3);
}

}  // namespace

double density_pT(const ThetaTriple& theta) {
  std::array<double, 3> t = theta.theta;
  std::sort(t.begin(), t.end());  // the density is symmetric; sorting makes
                                  // cyclic images evaluate bitwise identically
  return pT_from(t, f_kernel_memo(t[0]), f_kernel_memo(t[1]), f_kernel_memo(t[2]));
}

double density_pT_direct(const ThetaTriple& theta) {
  std::array<double, 3> t = theta.theta;
  std::sort(t.begin(), t.end());
  return pT_from(t, f_kernel(t[0]), f_kernel(t[1]), f_kernel(t[2]));
}

double PlanePlacement::w() const {
  if (!(sigma0 > 0.0)) throw std::domain_error("PlanePlacement::w: requires sigma0 > 0");
  return std::hypot(sigma_x, sigma_y) / sigma0;
}

PlanePlacement plane_coeffs(const PhiTriple& phi, const std::array<double, 3>& A) {
  for (double a : A)
    if (!(a >= 0.0)) throw std::invalid_argument("plane_coeffs: tip gaps must be nonnegative");
  double c[3], s[3];
  for (int i = 0; i < 3; ++i) {
    c[i] = std::cos(phi[i]);
    s[i] = std::sin(phi[i]);
  }
  auto det3 = [](double a11, double a12, double a13, double a21, double a22, double a23,
                 double a31, double a32, double a33) {
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
           a13 * (a21 * a32 - a22 * a31);
  };
  double delta = det3(c[0], s[0], 1, c[1], s[1], 1, c[2], s[2], 1);
  if (!(delta > kGeomTol)) throw std::invalid_argument("plane_coeffs: degenerate vertex triangle");
  double sigma0 = det3(c[0], s[0], A[0], c[1], s[1], A[1], c[2], s[2], A[2]) / delta;
  double sigma_x = det3(A[0], s[0], 1, A[1], s[1], 1, A[2], s[2], 1) / delta;
  double sigma_y = det3(c[0], A[0], 1, c[1], A[1], 1, c[2], A[2], 1) / delta;
  return {sigma0, sigma_x, sigma_y, delta, A, phi};
}

double script_A(const PlanePlacement& placement) {
  double sigma0 = placement.sigma0;
  double sigma_star = std::hypot(placement.sigma_x, placement.sigma_y);
  if (!(sigma0 > 0.0)) throw std::invalid_argument("script_A: requires sigma0 > 0");
  if (sigma_star < sigma0)
    throw std::invalid_argument("script_A: case-1 placement (sigma* < sigma0)");
  double ratio = std::max(-1.0, std::min(1.0, -sigma0 / sigma_star));
  double phi_sigma = std::acos(ratio);
  return (phi_sigma - std::tan(phi_sigma)) / kPi;
}

double script_A_quadrature(const PlanePlacement& placement, QuadratureSpec spec) {
  double sigma0 = placement.sigma0;
  double sx = placement.sigma_x, sy = placement.sigma_y;
  double sigma_star = std::hypot(sx, sy);
  if (!(sigma0 > 0.0)) throw std::invalid_argument("script_A_quadrature: requires sigma0 > 0");
  if (sigma_star < sigma0)
    throw std::invalid_argument("script_A_quadrature: case-1 placement (sigma* < sigma0)");
  auto gap = [&](double phi) {
    double v = sigma0 + sx * std::cos(phi) + sy * std::sin(phi);
    return v > 0.0 ? v : 0.0;
  };
  // split the circle at the two roots of the gap so each piece is smooth
  double ratio = std::max(-1.0, std::min(1.0, -sigma0 / sigma_star));
  double phi_sigma = std::acos(ratio);
  double psi = std::atan2(sy, sx);
  double r1 = wrap_2pi(psi - phi_sigma);
  double r2 = wrap_2pi(psi + phi_sigma);
  if (r1 > r2) std::swap(r1, r2);
  double integral = integrate_1d(gap, 0.0, r1, spec) + integrate_1d(gap, r1, r2, spec) +
                    integrate_1d(gap, r2, kTwoPi, spec);
  return integral / (kTwoPi * sigma0);
}

double prob_comb_below_plane(const PlanePlacement& placement) {
  double sigma0 = placement.sigma0;
  double sigma_star2 =
      placement.sigma_x * placement.sigma_x + placement.sigma_y * placement.sigma_y;
  if (sigma0 == 0.0 && sigma_star2 == 0.0) return 1.0;
  if (sigma_star2 < sigma0 * sigma0) return std::exp(-sigma0);
  return std::exp(-sigma0 * script_A(placement));
}

std::array<double, 3> cot_identity_residuals(const ThetaTriple& theta) {
  double c[3], half_sin[3], full_sin[3];
  for (int i = 0; i < 3; ++i) {
    half_sin[i] = std::sin(0.5 * theta[i]);
    c[i] = std::cos(0.5 * theta[i]) / half_sin[i];
    full_sin[i] = std::sin(theta[i]);
  }
  double prod_half = half_sin[0] * half_sin[1] * half_sin[2];
  double r1 = c[0] * c[1] + c[1] * c[2] + c[2] * c[0] - 1.0;
  double r2 = (full_sin[0] + full_sin[1] + full_sin[2]) / prod_half - 4.0;
  double r3 = 1.0 / prod_half - (c[0] + c[1] + c[2] - c[0] * c[1] * c[2]);
  return {r1, r2, r3};
}

double p_star_hoop(double mu, QuadratureSpec spec) {
  if (!(mu >= 0.0) || !(mu <= 1.0))
    throw std::invalid_argument("p_star_hoop: mu must lie in [0, 1]");
  if (mu >= 0.5) return 0.0;
  double alpha = std::acos(mu);
  auto clamp_pi = [](double x) { return std::max(0.0, std::min(kPi, x)); };
  auto integrand = [&](double t1, double t2) {
    double t3 = kTwoPi - t1 - t2;
    double fsum = f_kernel_memo(clamp_pi(t1)) + f_kernel_memo(clamp_pi(t2)) +
                  f_kernel_memo(clamp_pi(t3));
    return std::sin(0.5 * t1) * std::sin(0.5 * t2) * std::sin(0.5 * (t1 + t2)) *
           (1.0 / (kPi * kPi) + fsum);
  };
  double lo = kTwoPi - 4.0 * alpha;
  double hi = 2.0 * alpha;
  double value = integrate_2d(
      integrand, lo, hi, [&](double t1) { return kTwoPi - 2.0 * alpha - t1; },
      [&](double) { return hi; }, spec);
  return kTwoPi / 3.0 * value;
}

}  // namespace roughcomb
